#include "flagbal/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "flagbal/errors.hpp"

namespace flagbal {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents))
{
    if (exponents_.empty())
        throw input_error("monomial needs at least one variable slot");
    for (int e : exponents_)
        if (e < 0)
            throw input_error("negative exponent in monomial");
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::one(int n)
{
    return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int n, int index, int power)
{
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e.at(static_cast<std::size_t>(index)) = power;
    return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const
{
    return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

std::uint64_t Monomial::support() const
{
    if (n() > 64)
        throw budget_exceeded("support masks are limited to 64 variables");
    std::uint64_t s = 0;
    for (int i = 0; i < n(); ++i)
        if (exponents_[static_cast<std::size_t>(i)] > 0)
            s |= std::uint64_t{1} << i;
    return s;
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i])
            return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const
{
    std::vector<int> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += other.exponents_.at(i);
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const
{
    std::vector<int> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(e[i], other.exponents_.at(i));
    return Monomial(std::move(e));
}

Monomial Monomial::colon_variable(int i) const
{
    std::vector<int> e(exponents_);
    auto& slot = e.at(static_cast<std::size_t>(i));
    if (slot > 0)
        --slot;
    return Monomial(std::move(e));
}

std::string to_string(const Monomial& m)
{
    if (m.is_one())
        return "1";
    std::string out;
    for (int i = 0; i < m.n(); ++i)
    {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(i + 1);
        if (m[i] > 1)
            out += '^' + std::to_string(m[i]);
    }
    return out;
}

Monomial parse_monomial(std::string_view text, int n)
{
    if (n <= 0)
        throw input_error("monomials need a positive variable count");
    auto fail = [&](std::size_t pos, const std::string& what) {
        throw input_error("monomial '" + std::string(text) + "' at position " + std::to_string(pos) + ": " + what);
    };
    auto skip_space = [&](std::size_t& pos) {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
    };
    auto read_number = [&](std::size_t& pos) {
        const std::size_t start = pos;
        long value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000)
                fail(start, "number too large");
            ++pos;
        }
        if (pos == start)
            fail(start, "expected a number");
        return static_cast<int>(value);
    };

    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::size_t pos = 0;
    skip_space(pos);
    if (pos < text.size() && text[pos] == '1')
    {
        ++pos;
        skip_space(pos);
        if (pos != text.size())
            fail(pos, "unexpected trailing input after constant 1");
        return Monomial(std::move(e));
    }
    while (true)
    {
        skip_space(pos);
        if (pos >= text.size() || text[pos] != 'x')
            fail(pos, "expected 'x'");
        ++pos;
        const std::size_t index_pos = pos;
        const int index = read_number(pos);
        if (index < 1 || index > n)
            fail(index_pos, "variable index out of range 1.." + std::to_string(n));
        int power = 1;
        skip_space(pos);
        if (pos < text.size() && text[pos] == '^')
        {
            ++pos;
            skip_space(pos);
            power = read_number(pos);
        }
        e[static_cast<std::size_t>(index - 1)] += power;
        skip_space(pos);
        if (pos == text.size())
            break;
        if (text[pos] != '*')
            fail(pos, "expected '*' or end of input");
        ++pos;
    }
    return Monomial(std::move(e));
}

namespace {

// Exponent trie over x_1..x_n answering "does some stored monomial divide m".
class DivisorTrie
{
public:
    explicit DivisorTrie(int n) : n_(n), nodes_(1) {}

    void insert(const Monomial& m)
    {
        std::size_t node = 0;
        for (int i = 0; i < n_; ++i)
        {
            auto& kids = nodes_[node];
            auto it = std::lower_bound(kids.begin(), kids.end(), std::pair{m[i], std::size_t{0}});
            if (it != kids.end() && it->first == m[i])
            {
                node = it->second;
                continue;
            }
            const std::size_t child = nodes_.size();
            kids.insert(it, {m[i], child});
            nodes_.emplace_back();
            node = child;
        }
    }

    bool divides_some(const Monomial& m) const { return search(0, 0, m); }

private:
    bool search(std::size_t node, int depth, const Monomial& m) const
    {
        if (depth == n_)
            return true;
        for (const auto& [e, child] : nodes_[node])
        {
            if (e > m[depth])
                break;
            if (search(child, depth + 1, m))
                return true;
        }
        return false;
    }

    int n_;
    // children of each node as (exponent, node index), sorted by exponent
    std::vector<std::vector<std::pair<int, std::size_t>>> nodes_;
};

} // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n)
{
    if (n < 0)
        throw input_error("negative variable count");
    for (const auto& g : generators)
        if (g.n() != n)
            throw input_error("generator " + to_string(g) + " lives in " + std::to_string(g.n()) +
                              " variables, ideal in " + std::to_string(n));
    // Sorting by degree first means a generator can only be divided by an earlier one.
    std::sort(generators.begin(), generators.end(), DegreeLexGreater{});
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    DivisorTrie kept(n);
    for (auto& g : generators)
        if (!kept.divides_some(g))
        {
            kept.insert(g);
            generators_.push_back(std::move(g));
        }
}

bool MonomialIdeal::is_unit() const
{
    return generators_.size() == 1 && generators_.front().is_one();
}

bool MonomialIdeal::is_squarefree() const
{
    return std::all_of(generators_.begin(), generators_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::generated_in_degree(int d) const
{
    return std::all_of(generators_.begin(), generators_.end(), [d](const Monomial& g) { return g.degree() == d; });
}

int MonomialIdeal::max_generator_degree() const
{
    int d = 0;
    for (const auto& g : generators_)
        d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& other) const
{
    if (other.n_ != n_)
        throw input_error("ideal sum across different ambient rings");
    std::vector<Monomial> gens(generators_);
    gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
    return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const
{
    std::vector<Monomial> gens(generators_);
    gens.push_back(m);
    return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon_variable(int i) const
{
    std::vector<Monomial> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_)
        gens.push_back(g.colon_variable(i));
    return MonomialIdeal(n_, std::move(gens));
}

std::string to_string(const MonomialIdeal& ideal)
{
    std::string out = "(";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    {
        if (i)
            out += ", ";
        out += to_string(ideal.generators()[i]);
    }
    return out + ")";
}

} // namespace flagbal

#include "flagbal/regseq.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "flagbal/errors.hpp"

namespace flagbal {

namespace {

void require_quadratic(const MonomialIdeal& ideal)
{
    if (ideal.is_zero())
        throw input_error("expected a nonzero ideal");
    if (ideal.is_unit())
        throw input_error("expected a proper ideal");
    for (const auto& g : ideal.generators())
        if (g.degree() != 2)
            throw input_error("generator " + to_string(g) + " is not quadratic");
}

void require_length(int g)
{
    if (g > max_sequence_length)
        throw budget_exceeded("condition checks over 2^" + std::to_string(g) + " subsets exceed the cap g <= " +
                              std::to_string(max_sequence_length));
}

} // namespace

DegreeTwoDecomposition decompose_degree_two(const MonomialIdeal& ideal, const VariableSet& prime)
{
    require_quadratic(ideal);
    DegreeTwoDecomposition dec;
    dec.n = ideal.n();
    dec.prime = prime;
    std::sort(dec.prime.begin(), dec.prime.end());
    dec.spaces.assign(dec.prime.size(), {});
    for (const auto& gen : ideal.generators())
    {
        // The prime is sorted, so the first hit is the smallest dividing member.
        auto hit = std::find_if(dec.prime.begin(), dec.prime.end(), [&](int p) { return gen[p] > 0; });
        if (hit == dec.prime.end())
            throw std::logic_error("generator " + to_string(gen) + " is not divisible by any member of the prime");
        const int cofactor = gen[*hit] == 2 ? *hit : [&] {
            for (int v = 0; v < gen.n(); ++v)
                if (v != *hit && gen[v] > 0)
                    return v;
            return *hit;
        }();
        dec.spaces[static_cast<std::size_t>(hit - dec.prime.begin())].push_back(cofactor);
    }
    for (std::size_t i = 0; i < dec.spaces.size(); ++i)
    {
        auto& space = dec.spaces[i];
        std::sort(space.begin(), space.end());
        space.erase(std::unique(space.begin(), space.end()), space.end());
        if (space.empty())
            throw input_error("x" + std::to_string(dec.prime[i] + 1) +
                              " divides no generator, so the prime is not minimal");
    }
    return dec;
}

bool check_height_inequality(const DegreeTwoDecomposition& dec, IndexSubset subset)
{
    std::vector<bool> seen(static_cast<std::size_t>(dec.n), false);
    int count = 0;
    auto mark = [&](int v) {
        if (!seen[static_cast<std::size_t>(v)])
        {
            seen[static_cast<std::size_t>(v)] = true;
            ++count;
        }
    };
    for (int i = 0; i < dec.g(); ++i)
    {
        if ((subset >> i) & 1u)
            for (int v : dec.spaces[static_cast<std::size_t>(i)])
                mark(v);
        else
            mark(dec.prime[static_cast<std::size_t>(i)]);
    }
    return count >= dec.g();
}

MatchingInstance build_GA(const DegreeTwoDecomposition& dec, IndexSubset subset)
{
    MatchingInstance inst;
    inst.subset = subset;
    for (int j = 0; j < dec.g(); ++j)
    {
        if ((subset >> j) & 1u)
            inst.adjacency.push_back(dec.spaces[static_cast<std::size_t>(j)]);
        else
            inst.adjacency.push_back({dec.prime[static_cast<std::size_t>(j)]});
    }
    return inst;
}

VariableSet neighbourhood(const MatchingInstance& instance, const std::vector<int>& right)
{
    VariableSet out;
    for (int j : right)
        out.insert(out.end(), instance.adjacency[static_cast<std::size_t>(j)].begin(),
                   instance.adjacency[static_cast<std::size_t>(j)].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MatchingInstance find_matching(MatchingInstance inst)
{
    const int g = static_cast<int>(inst.adjacency.size());
    int n = 0;
    for (const auto& adj : inst.adjacency)
        for (int v : adj)
            n = std::max(n, v + 1);

    std::vector<int> right_of(static_cast<std::size_t>(n), -1);
    std::vector<int> left_of(static_cast<std::size_t>(g), -1);
    std::vector<char> visited;

    // Kuhn's augmenting paths from each right vertex.
    auto augment = [&](auto&& self, int j) -> bool {
        for (int v : inst.adjacency[static_cast<std::size_t>(j)])
        {
            if (visited[static_cast<std::size_t>(v)])
                continue;
            visited[static_cast<std::size_t>(v)] = 1;
            const int owner = right_of[static_cast<std::size_t>(v)];
            if (owner < 0 || self(self, owner))
            {
                right_of[static_cast<std::size_t>(v)] = j;
                left_of[static_cast<std::size_t>(j)] = v;
                return true;
            }
        }
        return false;
    };

    inst.matching.reset();
    inst.deficient_set.reset();
    for (int j = 0; j < g; ++j)
    {
        visited.assign(static_cast<std::size_t>(n), 0);
        if (augment(augment, j))
            continue;
        // Alternating tree from the unmatched j: its right side is a Hall violator.
        std::vector<int> deficient{j};
        std::vector<char> in_b(static_cast<std::size_t>(g), 0), seen(static_cast<std::size_t>(n), 0);
        in_b[static_cast<std::size_t>(j)] = 1;
        for (std::size_t k = 0; k < deficient.size(); ++k)
            for (int v : inst.adjacency[static_cast<std::size_t>(deficient[k])])
            {
                if (seen[static_cast<std::size_t>(v)])
                    continue;
                seen[static_cast<std::size_t>(v)] = 1;
                const int owner = right_of[static_cast<std::size_t>(v)];
                if (owner >= 0 && !in_b[static_cast<std::size_t>(owner)])
                {
                    in_b[static_cast<std::size_t>(owner)] = 1;
                    deficient.push_back(owner);
                }
            }
        std::sort(deficient.begin(), deficient.end());
        inst.deficient_set = std::move(deficient);
        return inst;
    }
    inst.matching = std::move(left_of);
    return inst;
}

std::uint64_t default_coefficient_range(int g)
{
    require_length(g);
    const auto gg = static_cast<std::uint64_t>(g);
    return std::max<std::uint64_t>(1, 2 * gg * gg * (std::uint64_t{1} << gg));
}

std::vector<LinearForm> sample_forms(const DegreeTwoDecomposition& dec, std::uint64_t seed, std::uint64_t range)
{
    if (range == 0)
        throw input_error("coefficient range must be positive");
    // rng() % range rather than a distribution object: mt19937_64 output is fixed by
    // the standard, distributions are not, and certificates must replay from the seed.
    std::mt19937_64 rng(seed);
    auto coefficient = [&rng, range] { return 1 + rng() % range; };
    std::vector<LinearForm> forms;
    for (const auto& space : dec.spaces)
    {
        if (space.empty())
            throw input_error("cannot sample from an empty space V_i");
        Vector<Rational> c = Vector<Rational>::Zero(dec.n);
        if (space.size() == 1)
            c(space.front()) = 1;
        else
            for (int v : space)
                c(v) = Rational(Integer(coefficient()));
        forms.emplace_back(std::move(c));
    }
    return forms;
}

std::vector<ProductOfLinearForms> RegularSequenceCertificate::products() const
{
    std::vector<ProductOfLinearForms> out;
    for (std::size_t i = 0; i < forms.size(); ++i)
        out.emplace_back(std::vector<LinearForm>{LinearForm::variable(ideal.n(), prime[i]), forms[i]});
    return out;
}

ConditionStarResult verify_condition_star(int n, const VariableSet& prime, const std::vector<LinearForm>& forms,
                                          const Field& field)
{
    const int g = static_cast<int>(prime.size());
    if (static_cast<int>(forms.size()) != g)
        throw input_error("condition check needs one form per prime variable");
    require_length(g);
    for (const auto& f : forms)
        if (f.n() != n)
            throw input_error("form lives in the wrong ambient ring");

    ConditionStarResult result;
    const std::uint64_t subsets = std::uint64_t{1} << g;
    std::vector<LinearForm> family;
    for (std::uint64_t a = 0; a < subsets; ++a)
    {
        family.clear();
        for (int i = 0; i < g; ++i)
            family.push_back(((a >> i) & 1u) ? LinearForm::variable(n, prime[static_cast<std::size_t>(i)])
                                             : forms[static_cast<std::size_t>(i)]);
        ++result.subsets_checked;
        if (rank_of_forms(family, field) != g)
        {
            result.holds = false;
            result.failing_subset = static_cast<IndexSubset>(a);
            return result;
        }
    }
    return result;
}

TransversalResult is_regular_sequence_of_products(const std::vector<ProductOfLinearForms>& products, const Field& field)
{
    TransversalResult result;
    const std::size_t r = products.size();
    if (r == 0)
        return result;
    std::vector<int> choice(r, 0);
    std::vector<LinearForm> family;
    while (true)
    {
        family.clear();
        for (std::size_t k = 0; k < r; ++k)
            family.push_back(products[k].factors()[static_cast<std::size_t>(choice[k])]);
        if (rank_of_forms(family, field) != static_cast<Eigen::Index>(r))
        {
            result.regular = false;
            result.witness = choice;
            return result;
        }
        // Odometer, first product varying fastest.
        std::size_t k = 0;
        while (k < r && ++choice[k] == products[k].degree())
            choice[k++] = 0;
        if (k == r)
            return result;
    }
}

namespace {

/// Coefficients t^k on the matching witnesses, k running over all (i, witness) pairs.
std::optional<std::vector<LinearForm>> matching_guided_search(const DegreeTwoDecomposition& dec)
{
    const int g = dec.g();
    std::vector<VariableSet> witnesses(static_cast<std::size_t>(g));
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << g); ++a)
    {
        const auto inst = find_matching(build_GA(dec, static_cast<IndexSubset>(a)));
        if (!inst.matching)
            throw std::logic_error("Hall condition fails for a genuine minimum minimal prime");
        for (int j = 0; j < g; ++j)
            if ((a >> j) & 1u)
                witnesses[static_cast<std::size_t>(j)].push_back((*inst.matching)[static_cast<std::size_t>(j)]);
    }
    for (auto& w : witnesses)
    {
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
    }
    constexpr int max_base = 256;
    for (int base = 1; base <= max_base; ++base)
    {
        std::vector<LinearForm> forms;
        Integer power = 1;
        for (const auto& w : witnesses)
        {
            Vector<Rational> c = Vector<Rational>::Zero(dec.n);
            for (int v : w)
            {
                c(v) = Rational(power);
                power *= base;
            }
            forms.emplace_back(std::move(c));
        }
        if (verify_condition_star(dec.n, dec.prime, forms).holds)
            return forms;
    }
    return std::nullopt;
}

} // namespace

RegularSequenceCertificate find_regular_sequence(const MonomialIdeal& ideal, const RegseqOptions& options)
{
    require_quadratic(ideal);
    const auto primes = minimal_primes(ideal);
    VariableSet prime = primes.front();
    if (options.prime)
    {
        VariableSet wanted = *options.prime;
        std::sort(wanted.begin(), wanted.end());
        if (std::find(primes.begin(), primes.end(), wanted) == primes.end() || wanted.size() != prime.size())
            throw input_error("requested prime is not a minimal prime of minimum size");
        prime = wanted;
    }
    require_length(static_cast<int>(prime.size()));

    const auto dec = decompose_degree_two(ideal, prime);
    const std::uint64_t range = options.coefficient_range.value_or(default_coefficient_range(dec.g()));

    RegularSequenceCertificate cert;
    cert.ideal = ideal;
    cert.prime = dec.prime;
    if (!options.field.is_rational())
        cert.precheck_field = options.field;

    if (!options.force_fallback)
        for (int attempt = 0; attempt <= options.retries; ++attempt)
        {
            const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(attempt);
            auto forms = sample_forms(dec, seed, range);
            if (cert.precheck_field && !verify_condition_star(dec.n, dec.prime, forms, *cert.precheck_field).holds)
                continue;
            const auto check = verify_condition_star(dec.n, dec.prime, forms);
            if (!check.holds)
                continue;
            cert.forms = std::move(forms);
            cert.subsets_checked = check.subsets_checked;
            cert.seed = seed;
            cert.mode = "sampled";
            return cert;
        }

    auto forms = matching_guided_search(dec);
    if (!forms)
        throw std::runtime_error("no regular sequence found; sampling and matching-guided search both failed");
    cert.forms = std::move(*forms);
    cert.subsets_checked = std::uint64_t{1} << dec.g();
    cert.seed = options.seed;
    cert.mode = "matching-fallback";
    return cert;
}

bool products_in_ideal(const RegularSequenceCertificate& cert)
{
    for (const auto& product : cert.products())
        for (const auto& [m, c] : product.expand())
            if (!cert.ideal.contains(m))
                return false;
    return true;
}

} // namespace flagbal

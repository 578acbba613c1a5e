#include "flagbal/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "flagbal/errors.hpp"

namespace flagbal {

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < k)
        return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
    {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::int64_t>::max())
            throw budget_exceeded("binomial coefficient C(" + std::to_string(n) + ", " + std::to_string(k) +
                                  ") overflows 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

SeriesNumerator trimmed(SeriesNumerator p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

SeriesNumerator multiply(const SeriesNumerator& a, const SeriesNumerator& b)
{
    if (a.empty() || b.empty())
        return {};
    SeriesNumerator out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return trimmed(std::move(out));
}

SeriesNumerator one_minus_t_power(int k)
{
    SeriesNumerator out(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i)
        out[static_cast<std::size_t>(i)] = (i % 2 ? -1 : 1) * binomial(k, i);
    return out;
}

namespace {

using Memo = std::map<std::vector<Monomial>, SeriesNumerator>;

bool pairwise_coprime(const std::vector<Monomial>& gens)
{
    std::uint64_t seen = 0;
    for (const auto& g : gens)
    {
        const std::uint64_t s = g.support();
        if (s & seen)
            return false;
        seen |= s;
    }
    return true;
}

SeriesNumerator numerator_rec(const MonomialIdeal& ideal, Memo& memo)
{
    const auto& gens = ideal.generators();
    if (gens.empty())
        return {1};
    if (ideal.is_unit())
        return {};
    if (pairwise_coprime(gens))
    {
        SeriesNumerator out{1};
        for (const auto& g : gens)
        {
            SeriesNumerator factor(static_cast<std::size_t>(g.degree()) + 1, 0);
            factor.front() = 1;
            factor.back() = -1;
            out = multiply(out, factor);
        }
        return out;
    }
    if (auto it = memo.find(gens); it != memo.end())
        return it->second;

    // Pivot on x_i^e, x_i dividing the most generators (at least two here) and e
    // the lower median exponent of x_i among them:
    // K(I) = K(I + x_i^e) + t^e K(I : x_i^e).
    const int n = ideal.n();
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i)
            if (g[i] > 0)
                ++counts[static_cast<std::size_t>(i)];
    const int pivot = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    std::vector<int> exponents;
    for (const auto& g : gens)
        if (g[pivot] > 0)
            exponents.push_back(g[pivot]);
    // The lower median sits below a pure power x_i^k, the unique largest exponent.
    const std::size_t mid = (exponents.size() - 1) / 2;
    std::nth_element(exponents.begin(), exponents.begin() + static_cast<std::ptrdiff_t>(mid), exponents.end());
    const int e = exponents[mid];

    std::vector<Monomial> lowered;
    lowered.reserve(gens.size());
    for (const auto& g : gens)
    {
        std::vector<int> x(g.exponents().begin(), g.exponents().end());
        x[static_cast<std::size_t>(pivot)] = std::max(0, x[static_cast<std::size_t>(pivot)] - e);
        lowered.emplace_back(std::move(x));
    }
    SeriesNumerator with_power = numerator_rec(ideal.plus(Monomial::variable(n, pivot, e)), memo);
    SeriesNumerator colon = numerator_rec(MonomialIdeal(n, std::move(lowered)), memo);
    const auto shift = static_cast<std::size_t>(e);
    SeriesNumerator out(std::max(with_power.size(), colon.size() + shift), 0);
    for (std::size_t i = 0; i < with_power.size(); ++i)
        out[i] += with_power[i];
    for (std::size_t i = 0; i < colon.size(); ++i)
        out[i + shift] += colon[i];
    out = trimmed(std::move(out));
    memo.emplace(gens, out);
    return out;
}

} // namespace

SeriesNumerator hilbert_numerator(const MonomialIdeal& ideal)
{
    if (ideal.n() > 64)
        throw budget_exceeded("Hilbert series limited to 64 variables");
    Memo memo;
    return numerator_rec(ideal, memo);
}

namespace {

// K(t) / (1 - t)^n with K(1) = 0 divided through, so the binomials below grow
// like d^(dim - 1) rather than d^(n - 1).
std::pair<SeriesNumerator, int> reduced_series(SeriesNumerator numerator, int n)
{
    numerator = trimmed(std::move(numerator));
    while (n > 0 && !numerator.empty() && std::accumulate(numerator.begin(), numerator.end(), std::int64_t{0}) == 0)
    {
        // synthetic division by (1 - t)
        SeriesNumerator q(numerator.size() - 1);
        std::int64_t running = 0;
        for (std::size_t k = 0; k + 1 < numerator.size(); ++k)
            q[k] = running += numerator[k];
        numerator = trimmed(std::move(q));
        --n;
    }
    return {std::move(numerator), n};
}

std::int64_t series_coefficient(const SeriesNumerator& numerator, int n, int d)
{
    std::int64_t v = 0;
    for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= d; ++k)
    {
        // Coefficient of t^m in (1 - t)^{-n} is C(n - 1 + m, m); for n = 0 only m = 0 survives.
        const int m = d - static_cast<int>(k);
        const std::int64_t c = n == 0 ? (m == 0 ? 1 : 0) : binomial(n - 1 + m, n - 1);
        std::int64_t term = 0;
        if (__builtin_mul_overflow(numerator[k], c, &term) || __builtin_add_overflow(v, term, &v))
            throw budget_exceeded("Hilbert function value in degree " + std::to_string(d) + " overflows 64 bits");
    }
    return v;
}

} // namespace

std::vector<std::int64_t> expand_series(const SeriesNumerator& numerator, int n, int max_degree)
{
    const auto [reduced, dim] = reduced_series(numerator, n);
    std::vector<std::int64_t> window(static_cast<std::size_t>(std::max(max_degree, -1) + 1), 0);
    for (int d = 0; d <= max_degree; ++d)
        window[static_cast<std::size_t>(d)] = series_coefficient(reduced, dim, d);
    return window;
}

std::int64_t HilbertData::value(int d) const
{
    if (d < 0)
        return 0;
    if (static_cast<std::size_t>(d) < window.size())
        return window[static_cast<std::size_t>(d)];
    const auto [reduced, dim] = reduced_series(numerator, n);
    return series_coefficient(reduced, dim, d);
}

HilbertData hilbert_function(const MonomialIdeal& ideal, int max_degree)
{
    if (max_degree < 0)
        throw input_error("degree bound must be non-negative");
    HilbertData data;
    data.n = ideal.n();
    data.numerator = hilbert_numerator(ideal);
    data.window = expand_series(data.numerator, data.n, max_degree);
    return data;
}

int default_degree_bound(const MonomialIdeal& ideal)
{
    return ideal.n() + ideal.max_generator_degree();
}

bool hilbert_series_equal(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.n() != b.n())
        throw input_error("Hilbert series comparison across different ambient rings (" + std::to_string(a.n()) +
                          " vs " + std::to_string(b.n()) + " variables)");
    if (a == b)
        return true;
    return hilbert_numerator(a) == hilbert_numerator(b);
}

} // namespace flagbal

#include "flagbal/lpp.hpp"

#include <algorithm>
#include <optional>

#include "flagbal/covers.hpp"
#include "flagbal/errors.hpp"
#include "flagbal/homology.hpp"

namespace flagbal {

namespace {

void fill_quotient(int n, const std::vector<int>& powers, int var, int remaining, std::vector<int>& exps,
                   std::vector<Monomial>& out)
{
    const int cap = var < static_cast<int>(powers.size()) ? powers[static_cast<std::size_t>(var)] - 1 : remaining;
    if (var == n - 1)
    {
        if (remaining <= cap)
        {
            exps[static_cast<std::size_t>(var)] = remaining;
            out.emplace_back(exps);
            exps[static_cast<std::size_t>(var)] = 0;
        }
        return;
    }
    for (int e = std::min(cap, remaining); e >= 0; --e)
    {
        exps[static_cast<std::size_t>(var)] = e;
        fill_quotient(n, powers, var + 1, remaining - e, exps, out);
    }
    exps[static_cast<std::size_t>(var)] = 0;
}

// Counts exponent vectors of a fixed degree with e_k < caps[k]; caps[k] < 0 means unbounded.
class CappedCounter
{
public:
    explicit CappedCounter(std::vector<int> caps) : caps_(std::move(caps))
    {
        const int n = static_cast<int>(caps_.size());
        suffix_.assign(static_cast<std::size_t>(n) + 1, {});
        free_.assign(static_cast<std::size_t>(n) + 1, 0);
        suffix_[static_cast<std::size_t>(n)] = {1};
        for (int k = n - 1; k >= 0; --k)
        {
            const auto& next = suffix_[static_cast<std::size_t>(k) + 1];
            const int cap = caps_[static_cast<std::size_t>(k)];
            free_[static_cast<std::size_t>(k)] = free_[static_cast<std::size_t>(k) + 1] + (cap < 0 ? 1 : 0);
            if (cap < 0)
            {
                suffix_[static_cast<std::size_t>(k)] = next;
                continue;
            }
            // multiply by 1 + t + ... + t^(cap-1)
            std::vector<std::int64_t> poly(cap == 0 ? 0 : next.size() + static_cast<std::size_t>(cap) - 1, 0);
            for (std::size_t j = 0; j < next.size(); ++j)
                for (int e = 0; e < cap; ++e)
                    poly[j + static_cast<std::size_t>(e)] += next[j];
            suffix_[static_cast<std::size_t>(k)] = std::move(poly);
        }
    }

    int n() const { return static_cast<int>(caps_.size()); }
    int cap(int k) const { return caps_[static_cast<std::size_t>(k)]; }

    /// Vectors on variables start..n-1 summing to x.
    std::int64_t count(int start, int x) const
    {
        if (x < 0)
            return 0;
        const auto& poly = suffix_[static_cast<std::size_t>(start)];
        const int b = free_[static_cast<std::size_t>(start)];
        std::int64_t total = 0;
        for (std::size_t j = 0; j < poly.size() && static_cast<int>(j) <= x; ++j)
        {
            const int rest = x - static_cast<int>(j);
            const std::int64_t ways = b == 0 ? (rest == 0 ? 1 : 0) : binomial(rest + b - 1, b - 1);
            total = checked_add(total, checked_mul(poly[j], ways));
        }
        return total;
    }

    /// Vectors of the same degree that are lex-greater than or equal to u.
    std::int64_t at_least(const Monomial& u) const
    {
        std::int64_t total = 0;
        int rem = u.degree();
        for (int i = 0; i < n(); ++i)
        {
            if (cap(i) < 0)
                // e_i > u_i free: shift e_i down by u_i + 1
                total = checked_add(total, count(i, rem - u[i] - 1));
            else
                for (int e = u[i] + 1; e <= std::min(cap(i) - 1, rem); ++e)
                    total = checked_add(total, count(i + 1, rem - e));
            if (cap(i) >= 0 && u[i] >= cap(i))
                return total;
            rem -= u[i];
        }
        return total + 1;
    }

    /// The vector at 0-based position r in descending lex order among those of degree d.
    Monomial unrank(int d, std::int64_t r) const
    {
        std::vector<int> e(static_cast<std::size_t>(n()), 0);
        int rem = d;
        for (int i = 0; i < n(); ++i)
        {
            int v = 0;
            if (cap(i) < 0)
            {
                // largest v with count(i, rem - v - 1) = #{e_i > v} <= r
                int lo = 0, hi = rem;
                while (lo < hi)
                {
                    const int mid = lo + (hi - lo + 1) / 2;
                    if (count(i, rem - mid) <= r)
                        hi = mid - 1;
                    else
                        lo = mid;
                }
                v = lo;
                r -= count(i, rem - v - 1);
            }
            else
                for (v = std::min(cap(i) - 1, rem); v > 0; --v)
                {
                    const std::int64_t c = count(i + 1, rem - v);
                    if (r < c)
                        break;
                    r -= c;
                }
            e[static_cast<std::size_t>(i)] = v;
            rem -= v;
        }
        return Monomial(std::move(e));
    }

private:
    static std::int64_t checked_add(std::int64_t a, std::int64_t b)
    {
        std::int64_t out = 0;
        if (__builtin_add_overflow(a, b, &out))
            throw budget_exceeded("lex-plus-powers counts overflow 64 bits");
        return out;
    }

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b)
    {
        std::int64_t out = 0;
        if (__builtin_mul_overflow(a, b, &out))
            throw budget_exceeded("lex-plus-powers counts overflow 64 bits");
        return out;
    }

    static std::int64_t binomial(int a, int k)
    {
        std::int64_t r = 1;
        for (int i = 1; i <= k; ++i)
            r = checked_mul(r, a - k + i) / i;
        return r;
    }

    std::vector<int> caps_;
    std::vector<std::vector<std::int64_t>> suffix_;
    std::vector<int> free_;
};

Monomial drop_last_variable(const Monomial& m)
{
    for (int i = m.n() - 1; i >= 0; --i)
        if (m[i] > 0)
            return m.colon_variable(i);
    return m;
}

// A lex segment in every degree makes the ideal part strongly stable in the
// quotient, so each of its monomials is uniquely u * v with u a generator and v
// in the variables x_m.. (m the last variable of u), within the caps. Over
// (1 - t)^n that contributes t^deg(u) (1 - t)^m (1 - t^(c_m - u_m)) prod_{k > m} (1 - t^c_k).
void subtract_decomposition_term(SeriesNumerator& numerator, const Monomial& u, const std::vector<int>& caps)
{
    int m = u.n() - 1;
    while (m > 0 && u[m] == 0)
        --m;
    SeriesNumerator term = one_minus_t_power(m);
    auto times_one_minus_power = [&term](int c) {
        SeriesNumerator factor(static_cast<std::size_t>(c) + 1, 0);
        factor.front() = 1;
        factor.back() = -1;
        term = multiply(term, factor);
    };
    if (caps[static_cast<std::size_t>(m)] >= 0)
        times_one_minus_power(caps[static_cast<std::size_t>(m)] - u[m]);
    for (std::size_t k = static_cast<std::size_t>(m) + 1; k < caps.size(); ++k)
        if (caps[k] >= 0)
            times_one_minus_power(caps[k]);
    const auto shift = static_cast<std::size_t>(u.degree());
    if (numerator.size() < shift + term.size())
        numerator.resize(shift + term.size(), 0);
    for (std::size_t j = 0; j < term.size(); ++j)
        numerator[shift + j] -= term[j];
}

} // namespace

std::vector<Monomial> quotient_monomials(int n, const std::vector<int>& powers, int d)
{
    if (d < 0)
        throw input_error("degree must be non-negative");
    if (static_cast<int>(powers.size()) > n)
        throw input_error("more pure powers than variables");
    for (int p : powers)
        if (p < 1)
            throw input_error("pure power exponents must be positive");
    std::vector<Monomial> out;
    if (n == 0)
        return out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    fill_quotient(n, powers, 0, d, exps, out);
    return out;
}

int lpp_degree_bound(const HilbertData& target)
{
    return std::max(2 * target.n, static_cast<int>(target.numerator.size()));
}

LppResult construct_lex_plus_powers(const LppTarget& target, int bound)
{
    const int n = target.n;
    if (!std::is_sorted(target.powers.begin(), target.powers.end()))
        throw input_error("pure power exponents must be non-decreasing");
    if (static_cast<int>(target.powers.size()) > n)
        throw input_error("more pure powers than variables");
    if (n == 0)
        throw input_error("lex-plus-powers construction needs at least one variable");
    for (int p : target.powers)
        if (p < 1)
            throw input_error("pure power exponents must be positive");

    std::vector<int> caps(static_cast<std::size_t>(n), -1);
    std::copy(target.powers.begin(), target.powers.end(), caps.begin());
    const CappedCounter slice(caps);
    // m = m' * x_l with l the last variable of m: m' may not use variables after l,
    // and m'_l stays one below the cap.
    std::vector<CappedCounter> by_last;
    for (int l = 0; l < n; ++l)
    {
        auto c = caps;
        if (c[static_cast<std::size_t>(l)] > 0)
            --c[static_cast<std::size_t>(l)];
        for (int k = l + 1; k < n; ++k)
            c[static_cast<std::size_t>(k)] = 1;
        by_last.emplace_back(std::move(c));
    }

    std::vector<Monomial> powers;
    for (std::size_t i = 0; i < target.powers.size(); ++i)
        powers.push_back(Monomial::variable(n, static_cast<int>(i), target.powers[i]));

    LppResult result;
    result.construction_bound = bound;
    std::vector<Monomial> lex;
    auto current = [&] {
        std::vector<Monomial> gens(powers);
        gens.insert(gens.end(), lex.begin(), lex.end());
        return MonomialIdeal(n, std::move(gens));
    };

    // Numerator of S/J over (1 - t)^n, kept current as generators arrive.
    SeriesNumerator numerator{1};
    for (int c : target.powers)
    {
        SeriesNumerator factor(static_cast<std::size_t>(c) + 1, 0);
        factor.front() = 1;
        factor.back() = -1;
        numerator = multiply(numerator, factor);
    }
    // Lex-last monomial of the ideal part in the previous degree.
    std::optional<Monomial> last;
    for (int d = 0; d <= bound; ++d)
    {
        const std::int64_t available = slice.count(0, d);
        std::int64_t shadow = 0;
        if (last)
            for (const auto& c : by_last)
                shadow += c.at_least(*last);
        const std::int64_t wanted = target.target.value(d);
        const std::int64_t picks = available - shadow - wanted;
        if (picks < 0)
            throw unattainable_target(d, "target Hilbert function " + std::to_string(wanted) + " exceeds the " +
                                             std::to_string(available - shadow) +
                                             " available monomials in degree " + std::to_string(d));
        // The shadow of a lex segment is a lex segment: dividing by the last
        // variable is monotone in lex. Check the boundary against the count.
        if (shadow > 0 && drop_last_variable(slice.unrank(d, shadow - 1)) < *last)
            result.lex_segment = false;
        if (last && shadow < available && !(drop_last_variable(slice.unrank(d, shadow)) < *last))
            result.lex_segment = false;

        for (std::int64_t r = shadow; r < shadow + picks; ++r)
        {
            lex.push_back(slice.unrank(d, r));
            subtract_decomposition_term(numerator, lex.back(), caps);
        }
        numerator = trimmed(std::move(numerator));
        result.picked.push_back(static_cast<int>(picks));
        if (shadow + picks > 0)
            last = slice.unrank(d, shadow + picks - 1);
        else
            last.reset();

        // Equal series means every later slice already has the target size.
        result.series_equal = result.lex_segment && numerator == target.target.numerator;
        if (result.series_equal)
        {
            result.construction_bound = d;
            break;
        }
    }
    result.ideal = current();
    if (!result.lex_segment)
        result.series_equal = hilbert_numerator(result.ideal) == target.target.numerator;
    return result;
}

std::pair<std::optional<int>, std::string> projective_dimension_report(const MonomialIdeal& ideal, const Field& field,
                                                                       int budget)
{
    if (ideal.is_squarefree() && ideal.n() <= budget)
        return {projective_dimension(betti_hochster(ideal, field, budget)), "hochster"};
    if (socle_monomial(ideal))
        return {ideal.n(), "socle"};
    if (const auto pd = linear_quotients_pd(ideal))
        return {*pd, "linear-quotients"};
    try
    {
        return {projective_dimension(betti_upper_koszul(ideal, field)), "upper-koszul"};
    }
    catch (const budget_exceeded&)
    {
    }
    try
    {
        const auto r = depth_and_pd(ideal, field, budget);
        return {r.pd, r.method};
    }
    catch (const budget_exceeded&)
    {
        return {std::nullopt, "budget-exceeded"};
    }
}

EghResult egh_for_quadratic(const MonomialIdeal& ideal, const EghOptions& options)
{
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("expected a proper nonzero ideal");
    if (!ideal.generated_in_degree(2))
        throw input_error("expected an ideal generated in degree 2, got " + to_string(ideal));

    EghResult out;
    out.source = ideal;
    out.g = height(ideal);
    LppTarget target;
    target.n = ideal.n();
    target.powers.assign(static_cast<std::size_t>(out.g), 2);
    const int bound = options.max_degree.value_or(lpp_construction_cap);
    target.target = hilbert_function(ideal, std::min(bound, 2 * ideal.n()));
    out.lpp = construct_lex_plus_powers(target, bound);

    std::tie(out.pd_source, out.pd_source_method) = projective_dimension_report(ideal, options.field, options.budget);
    std::tie(out.pd_result, out.pd_result_method) =
        projective_dimension_report(out.lpp.ideal, options.field, options.budget);
    return out;
}

} // namespace flagbal

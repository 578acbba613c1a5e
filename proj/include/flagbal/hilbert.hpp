#pragma once

#include <cstdint>
#include <vector>

#include "flagbal/monomial.hpp"

namespace flagbal {

/// Integer polynomial in t, coefficient k at index k, no trailing zeros.
using SeriesNumerator = std::vector<std::int64_t>;

/// Hilbert data of S/I: the window HF(0..D) and the exact numerator K(t)
/// with Hilbert series K(t) / (1 - t)^n.
struct HilbertData
{
    int n = 0;
    std::vector<std::int64_t> window;
    SeriesNumerator numerator;

    /// HF(d) for any d, recovered from the numerator.
    std::int64_t value(int d) const;
};

/// Exact Hilbert-series numerator of S/I, by pivot recursion
/// K(S/I) = K(S/(I + x^e)) + t^e K(S/(I : x^e)), x the most frequent variable
/// and e its lower median exponent among the generators.
SeriesNumerator hilbert_numerator(const MonomialIdeal& ideal);

/// Expands numerator / (1 - t)^n into HF(0..max_degree).
std::vector<std::int64_t> expand_series(const SeriesNumerator& numerator, int n, int max_degree);

HilbertData hilbert_function(const MonomialIdeal& ideal, int max_degree);

/// Default display window n + max generator degree.
int default_degree_bound(const MonomialIdeal& ideal);

/// True iff S/I and S/J have identical Hilbert series (all degrees).
bool hilbert_series_equal(const MonomialIdeal& a, const MonomialIdeal& b);

SeriesNumerator multiply(const SeriesNumerator& a, const SeriesNumerator& b);
SeriesNumerator trimmed(SeriesNumerator p);

/// (1 - t)^k as a numerator polynomial.
SeriesNumerator one_minus_t_power(int k);

std::int64_t binomial(std::int64_t n, std::int64_t k);

} // namespace flagbal

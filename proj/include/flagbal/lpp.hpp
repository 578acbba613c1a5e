#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagbal/exact.hpp"
#include "flagbal/hilbert.hpp"
#include "flagbal/monomial.hpp"

namespace flagbal {

/// Degree-d monomials of K[x_1..x_n] not divisible by x_i^{powers[i]} (i < powers.size()),
/// in descending lex order with x_1 > ... > x_n.
std::vector<Monomial> quotient_monomials(int n, const std::vector<int>& powers, int d);

struct LppTarget
{
    int n = 0;
    /// Non-decreasing exponents d_1 <= ... <= d_g of the pure powers x_1^{d_1}, ...
    std::vector<int> powers;
    HilbertData target;
};

struct LppResult
{
    MonomialIdeal ideal{0};
    int construction_bound = 0;
    /// picked[d] = number of lex generators chosen in degree d.
    std::vector<int> picked;
    /// In every degree the ideal part is an initial lex segment of the quotient monomials.
    bool lex_segment = true;
    /// Exact Hilbert-series agreement with the target numerator.
    bool series_equal = false;
};

/// Thrown when no ideal containing the powers can have the target Hilbert function.
class unattainable_target : public std::runtime_error
{
public:
    unattainable_target(int degree, const std::string& what) : std::runtime_error(what), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

/// Degree by degree, adds the lex-first monomials of the quotient slice not yet
/// in the ideal until the slice dimension drops to the target value. Slices are
/// addressed by lex rank through closed-form counts, never enumerated. Stops
/// early once the series match; construction_bound is then the last degree used.
LppResult construct_lex_plus_powers(const LppTarget& target, int bound);

/// max(2n, deg numerator + 1).
int lpp_degree_bound(const HilbertData& target);

/// Construction bound egh uses without an explicit max_degree. The construction
/// stops as soon as the series match, so this only caps runaway inputs.
constexpr int lpp_construction_cap = 1 << 16;

struct EghOptions
{
    Field field;
    /// Fixed construction bound in place of lpp_construction_cap.
    std::optional<int> max_degree;
    int budget = 16;
};

struct EghResult
{
    MonomialIdeal source{0};
    int g = 0;
    LppResult lpp;
    std::optional<int> pd_source;
    std::optional<int> pd_result;
    /// How each pd was obtained: "hochster", "socle", "linear-quotients", "upper-koszul",
    /// "hochster-polarized", or "budget-exceeded" with the pd left empty.
    std::string pd_source_method;
    std::string pd_result_method;
};

/// Lex-plus-squares ideal J with (x_1^2..x_g^2) in J and HF_J = HF_I, g = ht I.
EghResult egh_for_quadratic(const MonomialIdeal& ideal, const EghOptions& options = {});

/// pd(S/I): Hochster's formula for squarefree ideals within the budget, then a
/// socle monomial (pd = n), linear quotients of the generators, the upper Koszul
/// complexes of the lcm lattice, and the polarized Hochster computation. Empty
/// with method "budget-exceeded" when every applicable method is over budget.
std::pair<std::optional<int>, std::string> projective_dimension_report(const MonomialIdeal& ideal, const Field& field,
                                                                       int budget);

} // namespace flagbal

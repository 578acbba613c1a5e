#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagbal/exact.hpp"
#include "flagbal/monomial.hpp"
#include "flagbal/simplicial.hpp"

namespace flagbal {

/// Reduced Betti numbers in degrees -1 .. dim.
class ReducedBetti
{
public:
    ReducedBetti() = default;
    explicit ReducedBetti(std::vector<std::int64_t> from_minus_one) : ranks_(std::move(from_minus_one)) {}

    /// beta~_i, zero outside the stored range.
    std::int64_t operator()(int i) const;
    int top_degree() const { return static_cast<int>(ranks_.size()) - 2; }
    /// Entries for degrees -1, 0, 1, ...
    const std::vector<std::int64_t>& values() const { return ranks_; }
    /// Degrees 0..dim only.
    std::vector<std::int64_t> nonnegative() const;
    std::int64_t alternating_sum() const;

private:
    std::vector<std::int64_t> ranks_;
};

/// Dense reduced boundary map from faces of size k to faces of size k - 1.
/// `faces` must be closed under taking subsets.
Matrix<std::int64_t> boundary_matrix(std::span<const VertexSet> faces, int k);

/// Reduced homology of the complex whose (subset-closed) face list is `faces`.
ReducedBetti reduced_homology(std::span<const VertexSet> faces, const Field& field);

/// Throws input_error on the void complex.
ReducedBetti reduced_homology_ranks(const SimplicialComplex& complex, const Field& field);

struct ReisnerWitness
{
    VertexSet face;
    int degree;
    std::int64_t betti;
};

struct CmCertificate
{
    bool cohen_macaulay = true;
    Field field;
    std::size_t faces_checked = 0;
    /// Every (face, degree) with nonvanishing homology below the link's dimension.
    std::vector<ReisnerWitness> witnesses;
};

/// Reisner's criterion over the given field.
CmCertificate is_cohen_macaulay(const SimplicialComplex& complex, const Field& field);

/// Graded Betti numbers beta_{i,j}(S/I) keyed by (homological degree i, internal degree j).
using GradedBetti = std::map<std::pair<int, int>, std::int64_t>;

constexpr int default_hochster_budget = 16;

/// Hochster's formula beta_{i,sigma}(S/I) = dim H~_{|sigma|-i-1}(Delta|sigma), exhaustive
/// over all 2^n vertex subsets. Requires a squarefree ideal and n <= budget.
GradedBetti betti_hochster(const MonomialIdeal& ideal, const Field& field, int budget = default_hochster_budget);

/// Upper Koszul simplicial complexes K^b(I) over the lcm lattice; any monomial ideal.
/// The budget caps the size of the lcm lattice.
GradedBetti betti_upper_koszul(const MonomialIdeal& ideal, const Field& field, std::size_t lattice_budget = 1u << 18);

int projective_dimension(const GradedBetti& betti);

/// A monomial outside I that every variable multiplies into I, i.e. a nonzero
/// socle element of S/I. One exists iff depth(S/I) = 0, and then pd(S/I) = n.
std::optional<Monomial> socle_monomial(const MonomialIdeal& ideal);

/// pd(S/I) when the minimal generators, in their stored degree-lex order, have
/// linear quotients: each colon (u_1..u_{j-1}) : u_j is generated by variables.
/// The iterated mapping cone is then minimal and pd(S/I) = 1 + max_j |set(u_j)|.
/// Field independent. Empty when the order fails; throws on the zero and unit ideals.
std::optional<int> linear_quotients_pd(const MonomialIdeal& ideal);

struct DepthAndPd
{
    int depth = 0;
    int pd = 0;
    /// "hochster" or "hochster-polarized".
    std::string method;
};

/// pd(S/I) and depth(S/I) = n - pd(S/I). Non-squarefree ideals are polarized
/// first; the budget bounds the (polarized) variable count.
DepthAndPd depth_and_pd(const MonomialIdeal& ideal, const Field& field, int budget = default_hochster_budget);

} // namespace flagbal

#pragma once

/**
 * Regular sequences x_1 l_1, ..., x_g l_g inside a quadratic monomial ideal.
 *
 * With (x_{p_1}, ..., x_{p_g}) a minimal prime of minimum size, the degree-two
 * part of I splits as x_{p_1} V_1 + ... + x_{p_g} V_g with each V_i spanned by
 * variables. Picking l_i in V_i so that every mixed family
 * {x_{p_i} : i in A} u {l_i : i not in A} has rank g makes the products a
 * regular sequence. Each such rank condition is witnessed by a perfect
 * matching in a bipartite graph G_A, so generic l_i work; we sample them and
 * then verify all 2^g conditions exactly.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagbal/covers.hpp"
#include "flagbal/exact.hpp"
#include "flagbal/linear_forms.hpp"
#include "flagbal/monomial.hpp"

namespace flagbal {

/// Subsets of {0..g-1} as bitmasks.
using IndexSubset = std::uint32_t;

constexpr int max_sequence_length = 20;

struct DegreeTwoDecomposition
{
    int n = 0;
    /// The chosen minimal prime, sorted 0-based variable indices p_0 < ... < p_{g-1}.
    VariableSet prime;
    /// spaces[i] = variables spanning V_i, sorted.
    std::vector<VariableSet> spaces;

    int g() const { return static_cast<int>(prime.size()); }
};

/// Assigns each generator x_a x_b to the smallest prime member dividing it.
DegreeTwoDecomposition decompose_degree_two(const MonomialIdeal& ideal, const VariableSet& prime);

/// |union of V_i (i in A) and {x_{p_j} : j not in A}| >= g.
bool check_height_inequality(const DegreeTwoDecomposition& dec, IndexSubset subset);

/// The bipartite graph G_A: right vertex j is adjacent to V_j when j in A, to x_{p_j} otherwise.
struct MatchingInstance
{
    IndexSubset subset = 0;
    /// adjacency[j] = neighbouring variables of right vertex j.
    std::vector<VariableSet> adjacency;
    /// matching[j] = variable matched to j, when a perfect matching was found.
    std::optional<std::vector<int>> matching;
    /// Hall violation: right vertices B with |N(B)| < |B|.
    std::optional<std::vector<int>> deficient_set;
};

MatchingInstance build_GA(const DegreeTwoDecomposition& dec, IndexSubset subset);

/// Augmenting-path maximum matching. Fills `matching` on success and
/// `deficient_set` otherwise.
MatchingInstance find_matching(MatchingInstance instance);

/// Variables adjacent to a set of right vertices.
VariableSet neighbourhood(const MatchingInstance& instance, const std::vector<int>& right);

/// Default coefficient range 2 g^2 2^g.
std::uint64_t default_coefficient_range(int g);

/// l_i = sum over V_i of c x with c uniform in 1..range (coefficient 1 when dim V_i = 1).
std::vector<LinearForm> sample_forms(const DegreeTwoDecomposition& dec, std::uint64_t seed, std::uint64_t range);

struct RegularSequenceCertificate
{
    MonomialIdeal ideal{0};
    VariableSet prime;
    /// forms[i] pairs with x_{prime[i]}.
    std::vector<LinearForm> forms;
    std::uint64_t subsets_checked = 0;
    /// Field the certificate was established over (always Q).
    Field field;
    /// Field of the optional fast pre-check, if any.
    std::optional<Field> precheck_field;
    std::uint64_t seed = 0;
    /// "sampled" or "matching-fallback".
    std::string mode = "sampled";

    std::vector<ProductOfLinearForms> products() const;
};

struct ConditionStarResult
{
    bool holds = true;
    std::uint64_t subsets_checked = 0;
    /// Lexicographically first failing A (bitmask over positions), if any.
    std::optional<IndexSubset> failing_subset;
};

/// Checks rank({x_{p_i} : i in A} u {l_i : i not in A}) == g for every A.
ConditionStarResult verify_condition_star(int n, const VariableSet& prime, const std::vector<LinearForm>& forms,
                                          const Field& field = Field::rationals());

struct TransversalResult
{
    bool regular = true;
    /// For each product, the index of the chosen factor in a dependent transversal.
    std::optional<std::vector<int>> witness;
};

/// Products of linear forms form a regular sequence iff every choice of one
/// factor per product is linearly independent.
TransversalResult is_regular_sequence_of_products(const std::vector<ProductOfLinearForms>& products,
                                                  const Field& field = Field::rationals());

struct RegseqOptions
{
    std::uint64_t seed = 1;
    int retries = 8;
    std::optional<std::uint64_t> coefficient_range;
    /// Prime-field pre-check before exact certification; rationals means none.
    Field field;
    /// Explicit minimal prime; must have minimum size.
    std::optional<VariableSet> prime;
    /// Skip sampling and go straight to the matching-guided search.
    bool force_fallback = false;
};

/// Finds and certifies x_{p_i} l_i, i = 1..g. Throws input_error for ideals that
/// are not proper, nonzero and generated in degree two.
RegularSequenceCertificate find_regular_sequence(const MonomialIdeal& ideal, const RegseqOptions& options = {});

/// Every monomial of every x_{p_i} l_i lies in I.
bool products_in_ideal(const RegularSequenceCertificate& cert);

} // namespace flagbal

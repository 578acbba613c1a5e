#pragma once

#include <stdexcept>
#include <vector>

#include "flagbal/covers.hpp"
#include "flagbal/homology.hpp"
#include "flagbal/lpp.hpp"
#include "flagbal/simplicial.hpp"

namespace flagbal {

/// The input complex failed Reisner's criterion.
class not_cohen_macaulay : public std::runtime_error
{
public:
    explicit not_cohen_macaulay(CmCertificate cert);
    const CmCertificate& certificate() const { return cert_; }

private:
    CmCertificate cert_;
};

struct BalanceReport
{
    Field field;
    SimplicialComplex input;
    std::vector<std::int64_t> f_vector;
    std::vector<std::int64_t> h_vector;
    int g = 0;
    /// J' in g variables with (x_1^2..x_g^2) in J' and HF(K[x_1..x_g]/J') = h.
    MonomialIdeal artinian{0};
    LppResult construction;
    Polarization polarized{MonomialIdeal(0), {}};
    SimplicialComplex gamma;
    Coloring coloring;
    CmCertificate cm_input;
    CmCertificate cm_gamma;
    std::vector<std::int64_t> f_vector_gamma;
    std::vector<std::int64_t> h_vector_gamma;
    bool h_equal = false;
    bool balanced = false;

    bool certified() const { return h_equal && balanced && cm_gamma.cohen_macaulay && construction.series_equal; }
};

/// Hilbert data of an Artinian quotient in g variables with the given h-vector.
HilbertData artinian_target(const std::vector<std::int64_t>& h, int g);

/// Equal after dropping trailing zeros.
bool same_h_vector(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

/// CM flag complex -> CM balanced complex with the same h-vector, via the
/// lex-plus-squares ideal in g = ht I_Delta variables and its polarization.
/// Throws input_error when the complex is not flag and not_cohen_macaulay when
/// Reisner's criterion fails over the field.
BalanceReport balance(const SimplicialComplex& complex, const Field& field = Field::rationals());

} // namespace flagbal

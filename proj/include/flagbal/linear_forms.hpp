#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "flagbal/exact.hpp"
#include "flagbal/monomial.hpp"

namespace flagbal {

/// A linear form sum_i c_i x_i with exact rational coefficients.
class LinearForm
{
public:
    explicit LinearForm(Vector<Rational> coefficients);

    static LinearForm variable(int n, int index);

    int n() const { return static_cast<int>(coefficients_.size()); }
    const Vector<Rational>& coefficients() const { return coefficients_; }
    const Rational& operator[](int i) const { return coefficients_(i); }
    bool is_zero() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coefficients_ == b.coefficients_; }

private:
    Vector<Rational> coefficients_;
};

/// Renders `2*x2 + x3`.
std::string to_string(const LinearForm& form);

/// A product of nonzero linear forms, of degree = number of factors.
class ProductOfLinearForms
{
public:
    explicit ProductOfLinearForms(std::vector<LinearForm> factors);

    /// x^a as the product of its variables with multiplicity.
    static ProductOfLinearForms from_monomial(const Monomial& m);

    int degree() const { return static_cast<int>(factors_.size()); }
    int n() const { return factors_.front().n(); }
    const std::vector<LinearForm>& factors() const { return factors_; }

    /// Fully expanded polynomial, zero terms dropped.
    std::map<Monomial, Rational> expand() const;

private:
    std::vector<LinearForm> factors_;
};

/// Stacks forms as rows of a coefficient matrix.
Matrix<Rational> coefficient_matrix(std::span<const LinearForm> forms);

/// Rank of the span of the forms over the field.
Eigen::Index rank_of_forms(std::span<const LinearForm> forms, const Field& field = Field::rationals());

} // namespace flagbal

#include "flagbal/linear_forms.hpp"

#include "flagbal/errors.hpp"

namespace flagbal {

LinearForm::LinearForm(Vector<Rational> coefficients) : coefficients_(std::move(coefficients))
{
    if (coefficients_.size() == 0)
        throw input_error("linear form needs at least one variable");
}

LinearForm LinearForm::variable(int n, int index)
{
    Vector<Rational> c = Vector<Rational>::Zero(n);
    c(index) = 1;
    return LinearForm(std::move(c));
}

bool LinearForm::is_zero() const
{
    for (Eigen::Index i = 0; i < coefficients_.size(); ++i)
        if (coefficients_(i) != 0)
            return false;
    return true;
}

std::string to_string(const LinearForm& form)
{
    std::string out;
    for (int i = 0; i < form.n(); ++i)
    {
        const Rational& c = form[i];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        const Rational mag = negative ? Rational(-c) : c;
        if (mag != 1)
            out += to_string(mag) + "*";
        out += "x" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

ProductOfLinearForms::ProductOfLinearForms(std::vector<LinearForm> factors) : factors_(std::move(factors))
{
    if (factors_.empty())
        throw input_error("a product of linear forms needs at least one factor");
    for (const auto& f : factors_)
    {
        if (f.n() != factors_.front().n())
            throw input_error("factors live in different ambient rings");
        if (f.is_zero())
            throw input_error("zero linear form used as a factor");
    }
}

ProductOfLinearForms ProductOfLinearForms::from_monomial(const Monomial& m)
{
    std::vector<LinearForm> factors;
    for (int i = 0; i < m.n(); ++i)
        for (int k = 0; k < m[i]; ++k)
            factors.push_back(LinearForm::variable(m.n(), i));
    return ProductOfLinearForms(std::move(factors));
}

std::map<Monomial, Rational> ProductOfLinearForms::expand() const
{
    std::map<Monomial, Rational> poly{{Monomial::one(n()), Rational(1)}};
    for (const auto& f : factors_)
    {
        std::map<Monomial, Rational> next;
        for (const auto& [m, c] : poly)
            for (int i = 0; i < n(); ++i)
                if (f[i] != 0)
                    next[m.times(Monomial::variable(n(), i))] += c * f[i];
        std::erase_if(next, [](const auto& term) { return term.second == 0; });
        poly = std::move(next);
    }
    return poly;
}

Matrix<Rational> coefficient_matrix(std::span<const LinearForm> forms)
{
    if (forms.empty())
        return Matrix<Rational>(0, 0);
    Matrix<Rational> m(static_cast<Eigen::Index>(forms.size()), forms.front().n());
    for (std::size_t r = 0; r < forms.size(); ++r)
    {
        if (forms[r].n() != forms.front().n())
            throw input_error("linear forms live in different ambient rings");
        m.row(static_cast<Eigen::Index>(r)) = forms[r].coefficients().transpose();
    }
    return m;
}

Eigen::Index rank_of_forms(std::span<const LinearForm> forms, const Field& field)
{
    if (forms.empty())
        return 0;
    return rank(coefficient_matrix(forms), field);
}

} // namespace flagbal

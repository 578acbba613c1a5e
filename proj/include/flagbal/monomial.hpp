#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagbal {

/// A monomial x^a of S = K[x_1..x_n], stored as its exponent vector.
///
/// Variables are 0-based internally and rendered 1-based (`x1`). Ordering is
/// lexicographic on exponent vectors, i.e. the lex term order x_1 > ... > x_n.
class Monomial
{
public:
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int n);
    static Monomial variable(int n, int index, int power = 1);

    int n() const { return static_cast<int>(exponents_.size()); }
    int degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }
    bool is_squarefree() const;
    int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }
    std::span<const int> exponents() const { return exponents_; }

    /// Bit i set iff x_i divides this monomial; requires n <= 64.
    std::uint64_t support() const;

    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    /// The colon m : x_i, i.e. m with the exponent of x_i lowered by one (floored at 0).
    Monomial colon_variable(int i) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        return a.exponents_ <=> b.exponents_;
    }

private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

/// Renders `x1*x3^2`; the constant monomial renders as `1`.
std::string to_string(const Monomial& m);

/// Parses `x3^2*x5` (1-based indices, `^1` optional, `1` for the constant).
/// Throws input_error carrying the offending character position.
Monomial parse_monomial(std::string_view text, int n);

/// Orders by degree, then lex-descending within a degree.
struct DegreeLexGreater
{
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a > b;
    }
};

/// A monomial ideal with its minimal generating set.
///
/// The generating set is minimalized on every construction and kept in
/// DegreeLexGreater order, so two ideals are equal iff their generator
/// lists are equal.
class MonomialIdeal
{
public:
    explicit MonomialIdeal(int n, std::vector<Monomial> generators = {});

    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }

    int n() const { return n_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }

    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const;
    bool is_squarefree() const;
    bool generated_in_degree(int d) const;
    int max_generator_degree() const;

    bool contains(const Monomial& m) const;
    MonomialIdeal plus(const MonomialIdeal& other) const;
    MonomialIdeal plus(const Monomial& m) const;
    MonomialIdeal colon_variable(int i) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_ = 0;
    std::vector<Monomial> generators_;
};

std::string to_string(const MonomialIdeal& ideal);

} // namespace flagbal

#pragma once

/**
 * Exact scalar types and rank computations over Q and F_p.
 *
 * Matrices are plain dense Eigen matrices templated on the scalar. Nothing in
 * this library ever touches floating point: ranks over Q go through
 * fraction-free (Bareiss) elimination on integers, ranks over F_p through
 * modular Gaussian elimination.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace flagbal {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Coefficient field for a computation: the rationals or a prime field F_p.
class Field
{
public:
    enum class Kind { rational, prime };

    static constexpr std::uint64_t default_prime = 32003;

    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    /// Parses `q`, `p` (default prime) or `p:<prime>`.
    static Field parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Kind kind_ = Kind::rational;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t p);

/// Fraction-free Gaussian elimination; the matrix is consumed.
template <typename Int>
Eigen::Index bareiss_rank(Matrix<Int> m)
{
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index rank = 0;
    Int prev = 1;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c)
    {
        Eigen::Index pivot = rank;
        while (pivot < rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            m.row(pivot).swap(m.row(rank));
        for (Eigen::Index r = rank + 1; r < rows; ++r)
        {
            for (Eigen::Index k = c + 1; k < cols; ++k)
                m(r, k) = (m(rank, c) * m(r, k) - m(r, c) * m(rank, k)) / prev;
            m(r, c) = 0;
        }
        prev = m(rank, c);
        ++rank;
    }
    return rank;
}

/// Bareiss on machine integers; empty result when an intermediate overflows.
std::optional<Eigen::Index> bareiss_rank_checked(Matrix<std::int64_t> m);

/// Gaussian elimination modulo the prime p.
Eigen::Index modular_rank(const Matrix<std::int64_t>& m, std::uint64_t p);

/// Rank of an integer matrix over the given field.
Eigen::Index rank(const Matrix<std::int64_t>& m, const Field& field);

/// Rank of a rational matrix over the given field. Over F_p every denominator
/// must be invertible.
Eigen::Index rank(const Matrix<Rational>& m, const Field& field);

/// Reduces a rational into F_p; throws input_error when p divides the denominator.
std::int64_t reduce_mod(const Rational& q, std::uint64_t p);

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

} // namespace flagbal

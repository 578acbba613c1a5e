#include "flagbal/exact.hpp"

#include <charconv>

#include "flagbal/errors.hpp"

namespace flagbal {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint64_t p)
{
    // Products of two residues must fit in 64 bits.
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw input_error("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    Field f;
    f.kind_ = Kind::prime;
    f.p_ = p;
    return f;
}

Field Field::parse(std::string_view text)
{
    if (text == "q" || text == "Q" || text == "rational")
        return rationals();
    if (text == "p")
        return prime(default_prime);
    if (text.size() > 2 && text.substr(0, 2) == "p:")
    {
        std::uint64_t p = 0;
        auto digits = text.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw input_error("bad field specification '" + std::string(text) + "'");
        return prime(p);
    }
    throw input_error("bad field specification '" + std::string(text) + "' (expected q or p:<prime>)");
}

std::string Field::name() const
{
    return is_rational() ? std::string("q") : "p:" + std::to_string(p_);
}

std::optional<Eigen::Index> bareiss_rank_checked(Matrix<std::int64_t> m)
{
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index rank = 0;
    std::int64_t prev = 1;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c)
    {
        Eigen::Index pivot = rank;
        while (pivot < rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            m.row(pivot).swap(m.row(rank));
        const std::int64_t p = m(rank, c);
        for (Eigen::Index r = rank + 1; r < rows; ++r)
        {
            const std::int64_t f = m(r, c);
            if (f == 0 && prev == 1)
            {
                // Row unchanged up to the factor p.
                if (p != 1)
                    for (Eigen::Index k = c + 1; k < cols; ++k)
                        if (__builtin_mul_overflow(m(r, k), p, &m(r, k)))
                            return std::nullopt;
                continue;
            }
            for (Eigen::Index k = c + 1; k < cols; ++k)
            {
                std::int64_t a, b, d;
                if (__builtin_mul_overflow(p, m(r, k), &a) || __builtin_mul_overflow(f, m(rank, k), &b) ||
                    __builtin_sub_overflow(a, b, &d))
                    return std::nullopt;
                m(r, k) = d / prev;
            }
            m(r, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0)
    {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + p : t;
}

} // namespace

Eigen::Index modular_rank(const Matrix<std::int64_t>& input, std::uint64_t prime)
{
    const auto p = static_cast<std::int64_t>(prime);
    Matrix<std::int64_t> m = input.unaryExpr([p](std::int64_t v) { return ((v % p) + p) % p; });
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c)
    {
        Eigen::Index pivot = rank;
        while (pivot < rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            m.row(pivot).swap(m.row(rank));
        const std::int64_t inv = inverse_mod(m(rank, c), p);
        for (Eigen::Index k = c; k < cols; ++k)
            m(rank, k) = m(rank, k) * inv % p;
        for (Eigen::Index r = rank + 1; r < rows; ++r)
        {
            const std::int64_t f = m(r, c);
            if (f == 0)
                continue;
            for (Eigen::Index k = c; k < cols; ++k)
                m(r, k) = ((m(r, k) - f * m(rank, k)) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

Eigen::Index rank(const Matrix<std::int64_t>& m, const Field& field)
{
    if (!field.is_rational())
        return modular_rank(m, field.characteristic());
    if (auto r = bareiss_rank_checked(m))
        return *r;
    return bareiss_rank<Integer>(m.cast<Integer>());
}

std::int64_t reduce_mod(const Rational& q, std::uint64_t prime)
{
    const Integer p(prime);
    Integer num = boost::multiprecision::numerator(q) % p;
    Integer den = boost::multiprecision::denominator(q) % p;
    if (num < 0)
        num += p;
    if (den == 0)
        throw input_error("denominator of " + to_string(q) + " vanishes in F_" + std::to_string(prime));
    const auto pi = static_cast<std::int64_t>(prime);
    const auto n = num.convert_to<std::int64_t>();
    const auto d = den.convert_to<std::int64_t>();
    return n * inverse_mod(d, pi) % pi;
}

Eigen::Index rank(const Matrix<Rational>& m, const Field& field)
{
    if (!field.is_rational())
    {
        const std::uint64_t p = field.characteristic();
        Matrix<std::int64_t> reduced = m.unaryExpr([p](const Rational& q) { return reduce_mod(q, p); });
        return modular_rank(reduced, p);
    }
    // Clear denominators row by row, then eliminate over Z.
    Matrix<Integer> ints(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
    {
        Integer l = 1;
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m(r, c)));
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            ints(r, c) = boost::multiprecision::numerator(m(r, c)) * (l / boost::multiprecision::denominator(m(r, c)));
    }
    return bareiss_rank(std::move(ints));
}

std::string to_string(const Rational& q)
{
    return q.str();
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (s.empty())
            throw input_error("bad rational '" + std::string(text) + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw input_error("bad rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw input_error("bad rational '" + std::string(text) + "'");
        return Integer(std::string(s));
    };
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw input_error("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

} // namespace flagbal

#include <random>

#include <catch_amalgamated.hpp>

#include "flagbal/errors.hpp"
#include "flagbal/exact.hpp"
#include "oracles.hpp"

using namespace flagbal;

namespace {

Matrix<std::int64_t> random_matrix(std::mt19937_64& rng, int rows, int cols, int spread)
{
    std::uniform_int_distribution<int> entry(-spread, spread);
    Matrix<std::int64_t> m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m(r, c) = entry(rng);
    return m;
}

std::vector<std::vector<oracle::Rational>> as_rows(const Matrix<std::int64_t>& m)
{
    std::vector<std::vector<oracle::Rational>> rows(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            rows[static_cast<std::size_t>(r)].emplace_back(m(r, c));
    return rows;
}

} // namespace

TEST_CASE("field parsing")
{
    CHECK(Field::parse("q").is_rational());
    CHECK(Field::parse("p").characteristic() == 32003);
    CHECK(Field::parse("p:2").characteristic() == 2);
    CHECK(Field::parse("p:7").name() == "p:7");
    CHECK_THROWS_AS(Field::parse("p:8"), input_error);
    CHECK_THROWS_AS(Field::parse("r"), input_error);
    CHECK_THROWS_AS(Field::parse("p:"), input_error);
}

TEST_CASE("rank over Q matches rational Gauss-Jordan")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial)
    {
        const int rows = 1 + static_cast<int>(rng() % 7), cols = 1 + static_cast<int>(rng() % 7);
        auto m = random_matrix(rng, rows, cols, 3);
        // force some dependence
        if (rows > 2)
            m.row(rows - 1) = m.row(0) * 2 - m.row(1);
        CHECK(rank(m, Field::rationals()) == oracle::rank_rational(as_rows(m)));
    }
}

TEST_CASE("overflowing int64 elimination falls back to big integers")
{
    Matrix<std::int64_t> m(3, 3);
    const std::int64_t big = std::int64_t{1} << 40;
    m << big, big + 1, 3, big - 1, big, 5, 7, 11, big;
    CHECK_FALSE(bareiss_rank_checked(m).has_value());
    CHECK(rank(m, Field::rationals()) == oracle::rank_rational(as_rows(m)));
}

TEST_CASE("rank mod 2 matches bit elimination")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial)
    {
        const int rows = 1 + static_cast<int>(rng() % 8), cols = 1 + static_cast<int>(rng() % 8);
        const auto m = random_matrix(rng, rows, cols, 2);
        std::vector<std::vector<int>> ints(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                ints[static_cast<std::size_t>(r)].push_back(static_cast<int>(m(r, c)));
        CHECK(rank(m, Field::prime(2)) == oracle::rank_f2(ints));
    }
}

TEST_CASE("rank depends on the characteristic")
{
    Matrix<std::int64_t> m(2, 2);
    m << 1, 1, 1, -1;
    CHECK(rank(m, Field::rationals()) == 2);
    CHECK(rank(m, Field::prime(2)) == 1);
    CHECK(rank(m, Field::prime(3)) == 2);
}

TEST_CASE("rational matrices and reductions")
{
    Matrix<Rational> m(2, 3);
    m << Rational(1, 2), Rational(1, 3), 0, 3, 2, 0;
    CHECK(rank(m, Field::rationals()) == 1);
    CHECK(reduce_mod(Rational(1, 2), 7) == 4);
    CHECK(reduce_mod(Rational(-1), 7) == 6);
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("x"), input_error);
}

TEST_CASE("empty matrices have rank zero")
{
    CHECK(rank(Matrix<std::int64_t>(0, 4), Field::rationals()) == 0);
    CHECK(rank(Matrix<std::int64_t>(3, 0), Field::prime(5)) == 0);
}

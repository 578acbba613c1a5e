#include <random>

#include <catch_amalgamated.hpp>

#include "flagbal/covers.hpp"
#include "flagbal/errors.hpp"
#include "flagbal/homology.hpp"
#include "flagbal/lpp.hpp"
#include "oracles.hpp"

using namespace flagbal;

namespace {

MonomialIdeal ideal(int n, std::initializer_list<const char*> gens)
{
    std::vector<Monomial> out;
    for (const char* g : gens)
        out.push_back(parse_monomial(g, n));
    return MonomialIdeal(n, out);
}

std::vector<std::string> rendered(const std::vector<Monomial>& ms)
{
    std::vector<std::string> out;
    for (const auto& m : ms)
        out.push_back(to_string(m));
    return out;
}

LppTarget target_from_window(int n, std::vector<int> powers, std::vector<std::int64_t> window)
{
    // Artinian target: the numerator is window * (1 - t)^n.
    LppTarget t;
    t.n = n;
    t.powers = std::move(powers);
    t.target.n = n;
    t.target.window = window;
    t.target.numerator = trimmed(multiply(window, one_minus_t_power(n)));
    return t;
}

} // namespace

TEST_CASE("quotient monomials in descending lex order")
{
    CHECK(rendered(quotient_monomials(3, {2, 2, 2}, 2)) == std::vector<std::string>{"x1*x2", "x1*x3", "x2*x3"});
    CHECK(rendered(quotient_monomials(3, {2, 2, 2}, 0)) == std::vector<std::string>{"1"});
    CHECK(rendered(quotient_monomials(3, {2}, 2)) ==
          std::vector<std::string>{"x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"});
    CHECK(quotient_monomials(3, {2, 2, 2}, 4).empty());
}

TEST_CASE("quotient monomials match a filtered brute-force list")
{
    for (int n = 1; n <= 4; ++n)
        for (int g = 0; g <= n; ++g)
            for (int d = 0; d <= 5; ++d)
            {
                std::vector<int> powers(static_cast<std::size_t>(g), 2);
                std::vector<Monomial> expected;
                for (const auto& m : oracle::monomials_of_degree(n, d))
                {
                    bool excluded = false;
                    for (int i = 0; i < g; ++i)
                        excluded = excluded || m[i] >= 2;
                    if (!excluded)
                        expected.push_back(m);
                }
                std::sort(expected.begin(), expected.end(), std::greater<>());
                CHECK(quotient_monomials(n, powers, d) == expected);
            }
}

TEST_CASE("lex-plus-squares construction examples")
{
    const auto cube = construct_lex_plus_powers(target_from_window(3, {2, 2, 2}, {1, 3, 3, 1}), 6);
    CHECK(cube.ideal == ideal(3, {"x1^2", "x2^2", "x3^2"}));
    CHECK(cube.series_equal);
    CHECK(cube.lex_segment);

    const auto small = construct_lex_plus_powers(target_from_window(3, {2, 2, 2}, {1, 2, 1, 0}), 6);
    CHECK(small.ideal == ideal(3, {"x1", "x2^2", "x3^2"}));
    CHECK(small.series_equal);
    CHECK(small.picked[1] == 1);

    const auto too_big = target_from_window(2, {2, 2}, {1, 3});
    CHECK_THROWS_AS(construct_lex_plus_powers(too_big, 4), unattainable_target);
}

TEST_CASE("lex-plus-powers construction matches slice filtering")
{
    std::mt19937_64 rng(157);
    int compared = 0;
    for (int trial = 0; trial < 150; ++trial)
    {
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto source = oracle::random_ideal(rng, n, 1 + static_cast<int>(rng() % 4), 3);
        if (source.is_unit() || source.is_zero())
            continue;
        // powers x_i^{p_i} taken from the source's own pure powers keep the target attainable
        std::vector<int> powers;
        for (int i = 0; i < n; ++i)
        {
            int p = 0;
            for (int e = 1; e <= 3 && !p; ++e)
                if (source.contains(Monomial::variable(n, i, e)))
                    p = e;
            if (!p)
                break;
            powers.push_back(p);
        }
        if (!std::is_sorted(powers.begin(), powers.end()))
            continue;
        const int bound = 9;
        LppTarget t;
        t.n = n;
        t.powers = powers;
        t.target = hilbert_function(source, bound);
        const auto expected = oracle::lex_plus_powers(n, powers, oracle::hilbert_window(source, bound));
        INFO(to_string(source));
        if (!expected)
        {
            CHECK_THROWS_AS(construct_lex_plus_powers(t, bound), unattainable_target);
            continue;
        }
        const auto got = construct_lex_plus_powers(t, bound);
        ++compared;
        CHECK(got.lex_segment);
        CHECK(got.ideal == *expected);
        CHECK(got.series_equal == (hilbert_numerator(got.ideal) == t.target.numerator));
    }
    CHECK(compared > 60);
}

TEST_CASE("egh examples")
{
    const auto single = egh_for_quadratic(ideal(2, {"x1*x2"}));
    CHECK(single.g == 1);
    CHECK(single.lpp.ideal == ideal(2, {"x1^2"}));

    const auto octa = egh_for_quadratic(ideal(6, {"x1*x2", "x3*x4", "x5*x6"}));
    CHECK(octa.g == 3);
    CHECK(octa.lpp.series_equal);
    for (int i = 0; i < 3; ++i)
        CHECK(octa.lpp.ideal.contains(Monomial::variable(6, i, 2)));
    CHECK(hilbert_series_equal(octa.lpp.ideal, ideal(6, {"x1*x2", "x3*x4", "x5*x6"})));

    const auto fixed = ideal(3, {"x1^2", "x1*x2", "x2^2"});
    CHECK(egh_for_quadratic(fixed).lpp.ideal == fixed);

    CHECK_THROWS_AS(egh_for_quadratic(ideal(3, {"x1*x2*x3"})), input_error);
}

TEST_CASE("egh properties on random quadratic ideals")
{
    std::mt19937_64 rng(151);
    for (int trial = 0; trial < 80; ++trial)
    {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto i = oracle::random_quadratic(rng, n, 1 + static_cast<int>(rng() % 8), rng() % 2 == 0);
        const auto r = egh_for_quadratic(i);
        CHECK(r.g == height(i));
        CHECK(r.lpp.series_equal);
        CHECK(r.lpp.lex_segment);
        for (int k = 0; k < r.g; ++k)
            CHECK(r.lpp.ideal.contains(Monomial::variable(n, k, 2)));
        CHECK(oracle::hilbert_window(r.lpp.ideal, 10) == oracle::hilbert_window(i, 10));
        REQUIRE(r.pd_source);
        REQUIRE(r.pd_result);
        CHECK(*r.pd_source == depth_and_pd(i, Field::rationals()).pd);
        CHECK(*r.pd_result == projective_dimension(betti_upper_koszul(r.lpp.ideal, Field::rationals())));
    }
}

TEST_CASE("selected generators form a lex segment in each degree")
{
    std::mt19937_64 rng(157);
    for (int trial = 0; trial < 60; ++trial)
    {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto i = oracle::random_quadratic(rng, n, 1 + static_cast<int>(rng() % 6), false);
        const auto j = egh_for_quadratic(i).lpp.ideal;
        const int g = height(i);
        const std::vector<int> powers(static_cast<std::size_t>(g), 2);
        // In every degree the quotient monomials lying in J form an initial segment.
        for (int d = 1; d <= 2 * n; ++d)
        {
            const auto slice = quotient_monomials(n, powers, d);
            bool outside_seen = false;
            for (const auto& m : slice)
            {
                const bool inside = j.contains(m);
                CHECK_FALSE((inside && outside_seen));
                outside_seen = outside_seen || !inside;
            }
        }
    }
}

TEST_CASE("larger construction bounds keep earlier generators")
{
    std::mt19937_64 rng(163);
    for (int trial = 0; trial < 40; ++trial)
    {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto i = oracle::random_quadratic(rng, n, 1 + static_cast<int>(rng() % 6), rng() % 2 == 0);
        const int g = height(i);
        LppTarget t{n, std::vector<int>(static_cast<std::size_t>(g), 2), hilbert_function(i, 2 * n)};
        const int low = lpp_degree_bound(t.target);
        const auto small = construct_lex_plus_powers(t, low);
        const auto large = construct_lex_plus_powers(t, low + 4);
        std::vector<Monomial> below;
        for (const auto& m : large.ideal.generators())
            if (m.degree() <= low)
                below.push_back(m);
        CHECK(MonomialIdeal(n, below) == small.ideal);
    }
}

#include <catch_amalgamated.hpp>

#include "flagbal/errors.hpp"
#include "flagbal/report.hpp"
#include "flagbal/verify.hpp"

using namespace flagbal;

namespace {

const json triangle_ideal = {{"n", 3}, {"generators", {"x1*x2", "x1*x3", "x2*x3"}}};
const json octahedron_graph = {{"vertices", 6}, {"edges", {{1, 2}, {3, 4}, {5, 6}}}};

json regseq_report(const json& input)
{
    return to_json(find_regular_sequence(ideal_from_json(input)));
}

} // namespace

TEST_CASE("ideal and complex JSON round trips")
{
    const auto i = ideal_from_json(triangle_ideal);
    CHECK(i.size() == 3);
    CHECK(to_json(i) == triangle_ideal);

    const auto octa = complex_or_graph_from_json(octahedron_graph);
    CHECK(octa.facets().size() == 8);
    CHECK(complex_from_json(to_json(octa)) == octa);
    CHECK(complex_or_graph_from_json(to_json(octa)) == octa);
}

TEST_CASE("malformed inputs are input errors")
{
    CHECK_THROWS_AS(parse_json("{\"n\": 3,"), input_error);
    try
    {
        parse_json("{\n  \"n\": 3,\n  oops\n}");
        FAIL("expected a parse error");
    }
    catch (const input_error& e)
    {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(ideal_from_json({{"n", 2}, {"generators", {"x3"}}}), input_error);
    CHECK_THROWS_AS(complex_from_json({{"vertices", 2}, {"facets", {{1, 3}}}}), input_error);
    CHECK_THROWS_AS(graph_from_json({{"vertices", 2}, {"edges", {{1, 1}}}}), input_error);
}

TEST_CASE("rationals serialize as integers or fractions")
{
    CHECK(rational_to_json(Rational(5)) == json(5));
    CHECK(rational_to_json(Rational(-1, 2)) == json("-1/2"));
    CHECK(rational_from_json(json("3/6")) == Rational(1, 2));
    CHECK(rational_from_json(json(7)) == Rational(7));
}

TEST_CASE("regseq certificate format")
{
    const auto r = regseq_report(triangle_ideal);
    CHECK(r["kind"] == "regseq");
    CHECK(r["prime"] == json({1, 2}));
    CHECK(r["subsets_checked"] == 4);
    CHECK(r["forms"][0]["times_variable"] == 1);
    CHECK(r["forms"][1]["coefficients"] == json({{"x3", 1}}));
    CHECK(certificate_from_json(r).forms == find_regular_sequence(ideal_from_json(triangle_ideal)).forms);
}

TEST_CASE("every report verifies unmodified")
{
    CHECK(verify_report(regseq_report(triangle_ideal)).ok);
    const auto i = ideal_from_json(triangle_ideal);
    CHECK(verify_report(to_json(egh_for_quadratic(i), Field::rationals(), {})).ok);
    const auto octa = complex_or_graph_from_json(octahedron_graph);
    CHECK(verify_report(to_json(balance(octa))).ok);
    CHECK(verify_report(analyze_report(octa, Field::rationals())).ok);
}

TEST_CASE("a changed coefficient is caught with its failing subset")
{
    auto r = regseq_report(triangle_ideal);
    // l_1 = x3 makes {l_1, l_2} dependent, so A = {} fails.
    r["forms"][0]["coefficients"] = {{"x3", 1}};
    const auto v = verify_report(r);
    CHECK_FALSE(v.ok);
    REQUIRE(v.details.contains("failing_subset"));
    CHECK(v.details["failing_subset"] == json::array());
}

TEST_CASE("single-field tampering is detected")
{
    const auto i = ideal_from_json(triangle_ideal);
    const auto octa = complex_or_graph_from_json(octahedron_graph);
    const std::vector<json> reports{regseq_report(triangle_ideal), to_json(egh_for_quadratic(i), Field::rationals(), {}),
                                    to_json(balance(octa)), analyze_report(octa, Field::rationals())};
    for (const auto& report : reports)
        for (const auto& [key, value] : report.items())
        {
            if (key == "kind")
                continue;
            json tampered = report;
            if (value.is_boolean())
                tampered[key] = !value.get<bool>();
            else if (key == "budget")
                // any budget that leaves every pd method unchanged gives an equally valid report
                tampered[key] = 0;
            else if (value.is_number_integer())
                tampered[key] = value.get<std::int64_t>() + 1;
            else if (value.is_string())
                tampered[key] = value.get<std::string>() + "?";
            else if (value.is_array())
            {
                tampered[key].push_back(value.empty() ? json(1) : value.back());
            }
            else
                tampered[key] = json::object();
            INFO(report["kind"] << " field " << key);
            bool caught = false;
            try
            {
                caught = !verify_report(tampered).ok;
            }
            catch (const input_error&)
            {
                caught = true;
            }
            CHECK(caught);
        }
}

TEST_CASE("balance reports a non-CM input as data")
{
    const json two_edges = {{"vertices", 4}, {"facets", {{1, 2}, {3, 4}}}};
    CHECK_THROWS_AS(balance(complex_from_json(two_edges)), not_cohen_macaulay);
}

TEST_CASE("reports are byte-identical across runs")
{
    CHECK(regseq_report(triangle_ideal).dump() == regseq_report(triangle_ideal).dump());
    const auto octa = complex_or_graph_from_json(octahedron_graph);
    CHECK(to_json(balance(octa)).dump() == to_json(balance(octa)).dump());
}

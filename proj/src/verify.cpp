#include "flagbal/verify.hpp"

#include "flagbal/covers.hpp"
#include "flagbal/errors.hpp"

namespace flagbal {

namespace {

void compare_recomputed(const json& given, const json& recomputed, VerifyResult& result)
{
    for (const auto& [key, value] : recomputed.items())
        if (!given.contains(key) || given.at(key) != value)
            result.fail("field '" + key + "' does not match the recomputed report");
    for (const auto& [key, value] : given.items())
        if (!recomputed.contains(key))
            result.fail("unexpected field '" + key + "'");
}

json subset_positions(IndexSubset subset, int g)
{
    json out = json::array();
    for (int i = 0; i < g; ++i)
        if ((subset >> i) & 1u)
            out.push_back(i + 1);
    return out;
}

void verify_regseq(const json& report, VerifyResult& result)
{
    const auto cert = certificate_from_json(report);
    const int g = static_cast<int>(cert.prime.size());
    if (static_cast<int>(cert.forms.size()) != g)
    {
        result.fail("number of forms differs from the size of the prime");
        return;
    }
    const auto& forms = report.at("forms");
    for (int i = 0; i < g; ++i)
        if (forms[static_cast<std::size_t>(i)].at("times_variable") != cert.prime[static_cast<std::size_t>(i)] + 1)
            result.fail("form " + std::to_string(i + 1) + " is not paired with prime variable x" +
                        std::to_string(cert.prime[static_cast<std::size_t>(i)] + 1));

    const auto star = verify_condition_star(cert.ideal.n(), cert.prime, cert.forms);
    if (!star.holds)
    {
        result.fail("rank condition fails for a subset A");
        result.details["failing_subset"] = subset_positions(*star.failing_subset, g);
        json vars = json::array();
        for (int i = 0; i < g; ++i)
            if ((*star.failing_subset >> i) & 1u)
                vars.push_back(cert.prime[static_cast<std::size_t>(i)] + 1);
        result.details["failing_subset_variables"] = vars;
    }
    if (!products_in_ideal(cert))
        result.fail("some product x_i*l_i has a monomial outside the ideal");
    if (cert.subsets_checked != (std::uint64_t{1} << g))
        result.fail("subsets_checked is not 2^g");
    if (!cert.field.is_rational())
        result.fail("certificate must be established over q");

    const auto primes = minimal_primes(cert.ideal);
    if (std::find(primes.begin(), primes.end(), cert.prime) == primes.end() ||
        cert.prime.size() != primes.front().size())
        result.fail("prime is not a minimal prime of minimum size");
    if (!result.ok)
        return;

    RegseqOptions options;
    options.seed = cert.seed;
    options.retries = 0;
    options.prime = cert.prime;
    options.force_fallback = cert.mode == "matching-fallback";
    if (cert.precheck_field)
        options.field = *cert.precheck_field;
    try
    {
        compare_recomputed(report, to_json(find_regular_sequence(cert.ideal, options)), result);
    }
    catch (const std::exception& e)
    {
        result.fail(std::string("certificate is not reproducible from its seed: ") + e.what());
    }
}

void verify_egh(const json& report, VerifyResult& result)
{
    const MonomialIdeal source = ideal_from_json(report.at("ideal"));
    std::vector<Monomial> gens;
    for (const auto& g : report.at("generators"))
        gens.push_back(parse_monomial(g.get<std::string>(), source.n()));
    const MonomialIdeal claimed(source.n(), gens);
    const int g = report.at("powers").get<int>();
    if (g != height(source))
        result.fail("'powers' differs from the height of the ideal");
    for (int i = 0; i < g && i < source.n(); ++i)
        if (!claimed.contains(Monomial::variable(source.n(), i, 2)))
            result.fail("x" + std::to_string(i + 1) + "^2 is not in the claimed ideal");
    if (!hilbert_series_equal(source, claimed))
        result.fail("Hilbert series of the claimed ideal differs from the source");

    EghOptions options;
    options.field = Field::parse(report.at("field").get<std::string>());
    options.budget = report.at("budget").get<int>();
    if (!report.at("max_degree").is_null())
        options.max_degree = report.at("max_degree").get<int>();
    compare_recomputed(report, to_json(egh_for_quadratic(source, options), options.field, {options.max_degree, options.budget}),
                       result);
}

void verify_balance(const json& report, VerifyResult& result)
{
    const Field field = Field::parse(report.at("field").get<std::string>());
    const SimplicialComplex input = complex_from_json(report.at("input"));
    const SimplicialComplex gamma = complex_from_json(report.at("gamma"));
    const Coloring coloring = report.at("coloring").get<Coloring>();
    if (!same_h_vector(h_vector(input), h_vector(gamma)))
        result.fail("h-vectors of input and gamma differ");
    if (!check_balanced(gamma, coloring))
        result.fail("coloring is not a balanced coloring of gamma");
    if (!is_cohen_macaulay(gamma, field).cohen_macaulay)
        result.fail("gamma is not Cohen-Macaulay over " + field.name());
    compare_recomputed(report, to_json(balance(input, field)), result);
}

void verify_analyze(const json& report, VerifyResult& result)
{
    const Field field = Field::parse(report.at("field").get<std::string>());
    compare_recomputed(report, analyze_report(complex_from_json(report.at("complex")), field), result);
}

} // namespace

VerifyResult verify_report(const json& report)
{
    VerifyResult result;
    if (!report.is_object() || !report.contains("kind") || !report["kind"].is_string())
        throw input_error("report has no 'kind'");
    const auto kind = report["kind"].get<std::string>();
    try
    {
        if (kind == "regseq")
            verify_regseq(report, result);
        else if (kind == "egh")
            verify_egh(report, result);
        else if (kind == "balance")
            verify_balance(report, result);
        else if (kind == "analyze")
            verify_analyze(report, result);
        else
            throw input_error("unknown report kind '" + kind + "'");
    }
    catch (const json::exception& e)
    {
        result.fail(std::string("report is structurally invalid: ") + e.what());
    }
    catch (const input_error& e)
    {
        if (kind != "regseq" && kind != "egh" && kind != "balance" && kind != "analyze")
            throw;
        result.fail(std::string("report content is invalid: ") + e.what());
    }
    catch (const not_cohen_macaulay& e)
    {
        result.fail(e.what());
    }
    return result;
}

} // namespace flagbal

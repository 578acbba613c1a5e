#include "flagbal/report.hpp"

#include <limits>

#include "flagbal/covers.hpp"
#include "flagbal/errors.hpp"

namespace flagbal {

namespace {

const json& field_of(const json& j, const char* key)
{
    if (!j.is_object())
        throw input_error(std::string("expected a JSON object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw input_error(std::string("missing key '") + key + "'");
    return *it;
}

int int_of(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw input_error(std::string(what) + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw input_error(std::string(what) + " out of range");
    return static_cast<int>(v);
}

json vertex_list(VertexSet s)
{
    json out = json::array();
    for (int v : s.indices())
        out.push_back(v + 1);
    return out;
}

json one_based(const std::vector<int>& xs)
{
    json out = json::array();
    for (int v : xs)
        out.push_back(v + 1);
    return out;
}

json generator_strings(const MonomialIdeal& ideal)
{
    json out = json::array();
    for (const auto& g : ideal.generators())
        out.push_back(to_string(g));
    return out;
}

} // namespace

json parse_json(const std::string& text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        // Byte offset -> line/column.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
        {
            if (text[i] == '\n')
            {
                ++line;
                column = 1;
            }
            else
                ++column;
        }
        throw input_error("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                          " (byte " + std::to_string(e.byte) + ")");
    }
}

json to_json(const MonomialIdeal& ideal)
{
    return {{"n", ideal.n()}, {"generators", generator_strings(ideal)}};
}

MonomialIdeal ideal_from_json(const json& j)
{
    const int n = int_of(field_of(j, "n"), "ideal variable count n");
    if (n < 0)
        throw input_error("ideal variable count must be non-negative");
    const json& gens = field_of(j, "generators");
    if (!gens.is_array())
        throw input_error("'generators' must be an array of monomial strings");
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
    {
        if (!gens[i].is_string())
            throw input_error("generator " + std::to_string(i) + " is not a string");
        try
        {
            out.push_back(parse_monomial(gens[i].get<std::string>(), n));
        }
        catch (const input_error& e)
        {
            throw input_error("generator " + std::to_string(i) + ": " + e.what());
        }
    }
    return MonomialIdeal(n, std::move(out));
}

json to_json(const SimplicialComplex& complex)
{
    json facets = json::array();
    for (auto f : complex.facets())
        facets.push_back(vertex_list(f));
    return {{"vertices", complex.vertex_count()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j)
{
    const int n = int_of(field_of(j, "vertices"), "vertex count");
    if (n < 0 || n > SimplicialComplex::max_vertices)
        throw input_error("vertex count must lie in 0..64");
    const json& facets = field_of(j, "facets");
    if (!facets.is_array())
        throw input_error("'facets' must be an array of vertex lists");
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < facets.size(); ++i)
    {
        if (!facets[i].is_array())
            throw input_error("facet " + std::to_string(i) + " is not an array");
        std::vector<int> vs;
        for (const auto& v : facets[i])
        {
            const int x = int_of(v, "vertex");
            if (x < 1 || x > n)
                throw input_error("facet " + std::to_string(i) + " has vertex " + std::to_string(x) +
                                  " outside 1.." + std::to_string(n));
            vs.push_back(x - 1);
        }
        out.push_back(VertexSet::from_indices(vs));
    }
    return SimplicialComplex(n, std::move(out));
}

Graph graph_from_json(const json& j)
{
    Graph g;
    g.vertices = int_of(field_of(j, "vertices"), "vertex count");
    if (g.vertices < 0 || g.vertices > SimplicialComplex::max_vertices)
        throw input_error("vertex count must lie in 0..64");
    const json& edges = field_of(j, "edges");
    if (!edges.is_array())
        throw input_error("'edges' must be an array of vertex pairs");
    for (const auto& e : edges)
    {
        if (!e.is_array() || e.size() != 2)
            throw input_error("every edge must be a pair of vertices");
        const int a = int_of(e[0], "edge endpoint"), b = int_of(e[1], "edge endpoint");
        if (a < 1 || b < 1 || a > g.vertices || b > g.vertices)
            throw input_error("edge endpoint outside 1.." + std::to_string(g.vertices));
        if (a == b)
            throw input_error("graph loops are not allowed (vertex " + std::to_string(a) + ")");
        g.edges.emplace_back(a - 1, b - 1);
    }
    return g;
}

SimplicialComplex complex_or_graph_from_json(const json& j)
{
    if (j.is_object() && j.contains("edges"))
        return independence_complex(graph_from_json(j));
    return complex_from_json(j);
}

json to_json(const CmCertificate& cert)
{
    json witnesses = json::array();
    for (const auto& w : cert.witnesses)
        witnesses.push_back({{"face", vertex_list(w.face)}, {"degree", w.degree}, {"betti", w.betti}});
    return {{"cohen_macaulay", cert.cohen_macaulay},
            {"field", cert.field.name()},
            {"faces_checked", cert.faces_checked},
            {"witnesses", witnesses}};
}

json rational_to_json(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
    {
        const Integer num = boost::multiprecision::numerator(q);
        if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
            return num.convert_to<std::int64_t>();
    }
    return to_string(q);
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(Integer(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw input_error("coefficient must be an integer or an \"a/b\" string");
}

json to_json(const RegularSequenceCertificate& cert)
{
    json forms = json::array();
    for (std::size_t i = 0; i < cert.forms.size(); ++i)
    {
        json coefficients = json::object();
        for (int v = 0; v < cert.forms[i].n(); ++v)
            if (cert.forms[i][v] != 0)
                coefficients["x" + std::to_string(v + 1)] = rational_to_json(cert.forms[i][v]);
        forms.push_back({{"times_variable", cert.prime[i] + 1},
                         {"coefficients", coefficients},
                         {"product", "x" + std::to_string(cert.prime[i] + 1) + "*(" + to_string(cert.forms[i]) + ")"}});
    }
    json out = {{"kind", "regseq"},
                {"ideal", to_json(cert.ideal)},
                {"prime", one_based(cert.prime)},
                {"forms", forms},
                {"seed", cert.seed},
                {"subsets_checked", cert.subsets_checked},
                {"field", cert.field.name()},
                {"mode", cert.mode}};
    out["precheck_field"] = cert.precheck_field ? json(cert.precheck_field->name()) : json(nullptr);
    return out;
}

RegularSequenceCertificate certificate_from_json(const json& j)
{
    RegularSequenceCertificate cert;
    cert.ideal = ideal_from_json(field_of(j, "ideal"));
    const int n = cert.ideal.n();
    for (const auto& p : field_of(j, "prime"))
    {
        const int v = int_of(p, "prime variable");
        if (v < 1 || v > n)
            throw input_error("prime variable outside 1.." + std::to_string(n));
        cert.prime.push_back(v - 1);
    }
    const json& forms = field_of(j, "forms");
    if (!forms.is_array())
        throw input_error("'forms' must be an array");
    for (const auto& f : forms)
    {
        const int times = int_of(field_of(f, "times_variable"), "times_variable");
        if (times < 1 || times > n)
            throw input_error("times_variable outside 1.." + std::to_string(n));
        (void)times;
        Vector<Rational> c = Vector<Rational>::Zero(n);
        const json& coefficients = field_of(f, "coefficients");
        if (!coefficients.is_object())
            throw input_error("'coefficients' must be an object");
        for (const auto& [key, value] : coefficients.items())
        {
            const Monomial var = parse_monomial(key, n);
            if (var.degree() != 1)
                throw input_error("coefficient key '" + key + "' is not a variable");
            const auto idx = static_cast<Eigen::Index>(std::find(var.exponents().begin(), var.exponents().end(), 1) -
                                                       var.exponents().begin());
            c(idx) = rational_from_json(value);
        }
        cert.forms.emplace_back(std::move(c));
    }
    cert.seed = field_of(j, "seed").get<std::uint64_t>();
    cert.subsets_checked = field_of(j, "subsets_checked").get<std::uint64_t>();
    cert.field = Field::parse(field_of(j, "field").get<std::string>());
    if (j.contains("mode"))
        cert.mode = j["mode"].get<std::string>();
    if (j.contains("precheck_field") && !j["precheck_field"].is_null())
        cert.precheck_field = Field::parse(j["precheck_field"].get<std::string>());
    return cert;
}

json to_json(const EghResult& result, const Field& field, const EghReportOptions& options)
{
    const auto& lpp = result.lpp;
    const std::vector<Monomial> gens = lpp.ideal.generators();
    json out = {{"kind", "egh"},
                {"ideal", to_json(result.source)},
                {"powers", result.g},
                {"generators", generator_strings(lpp.ideal)},
                {"series_equal", lpp.series_equal},
                {"lex_segment", lpp.lex_segment},
                {"construction_bound", lpp.construction_bound},
                {"picked", lpp.picked},
                {"hilbert_numerator", hilbert_numerator(result.source)},
                {"field", field.name()},
                {"budget", options.budget}};
    out["max_degree"] = options.max_degree ? json(*options.max_degree) : json(nullptr);
    out["pd_source"] = result.pd_source ? json(*result.pd_source) : json(nullptr);
    out["pd_result"] = result.pd_result ? json(*result.pd_result) : json(nullptr);
    out["pd_equal"] = result.pd_source && result.pd_result && *result.pd_source == *result.pd_result;
    out["pd_source_method"] = result.pd_source_method;
    out["pd_result_method"] = result.pd_result_method;
    return out;
}

json to_json(const BalanceReport& report)
{
    json classes = json::array();
    for (const auto& cls : report.polarized.classes)
        classes.push_back(one_based(cls));
    return {{"kind", "balance"},
            {"field", report.field.name()},
            {"input", to_json(report.input)},
            {"f_vector", report.f_vector},
            {"h_vector", report.h_vector},
            {"g", report.g},
            {"artinian", to_json(report.artinian)},
            {"polarized", to_json(report.polarized.ideal)},
            {"classes", classes},
            {"gamma", to_json(report.gamma)},
            {"coloring", report.coloring},
            {"cm_input", to_json(report.cm_input)},
            {"cm_gamma", to_json(report.cm_gamma)},
            {"f_vector_gamma", report.f_vector_gamma},
            {"h_vector_gamma", report.h_vector_gamma},
            {"h_equal", report.h_equal},
            {"balanced", report.balanced},
            {"series_equal", report.construction.series_equal},
            {"certified", report.certified()}};
}

json analyze_report(const SimplicialComplex& complex, const Field& field)
{
    if (complex.is_void())
        throw input_error("cannot analyze the void complex");
    json out = {{"kind", "analyze"},
                {"field", field.name()},
                {"complex", to_json(complex)},
                {"dimension", complex.dimension()},
                {"pure", complex.is_pure()},
                {"f_vector", f_vector(complex)},
                {"h_vector", h_vector(complex)},
                {"flag", is_flag(complex)},
                {"reduced_homology", reduced_homology_ranks(complex, field).values()},
                {"cm", to_json(is_cohen_macaulay(complex, field))}};
    if (complex.vertex_count() > 0)
    {
        const auto sr = stanley_reisner(complex);
        out["stanley_reisner"] = to_json(sr);
        out["height"] = (sr.is_zero() || sr.is_unit()) ? json(0) : json(height(sr));
    }
    else
    {
        out["stanley_reisner"] = to_json(MonomialIdeal::zero(0));
        out["height"] = 0;
    }
    return out;
}

} // namespace flagbal

#pragma once

/**
 * JSON formats.
 *
 *   ideal        {"n": 4, "generators": ["x1*x2", "x3^2"]}
 *   complex      {"vertices": 6, "facets": [[1,3,5], [1,3,6], ...]}
 *   graph        {"vertices": 6, "edges": [[1,2], [3,4], [5,6]]}
 *   regseq       {"kind": "regseq", "prime": [...], "forms": [{"times_variable": i,
 *                 "coefficients": {"x2": a, ...}}, ...], "seed": s, "subsets_checked": 2^g, ...}
 *   egh          {"kind": "egh", "powers": g, "generators": [...], "series_equal": true,
 *                 "pd_source": p1, "pd_result": p2, ...}
 *   balance      {"kind": "balance", ...}
 *   analyze      {"kind": "analyze", ...}
 *
 * Vertices and variables are 1-based in every format. Objects use sorted keys,
 * so a report serializes to the same bytes whenever its content is the same.
 */

#include <json.hpp>

#include "flagbal/homology.hpp"
#include "flagbal/lpp.hpp"
#include "flagbal/monomial.hpp"
#include "flagbal/pipeline.hpp"
#include "flagbal/regseq.hpp"
#include "flagbal/simplicial.hpp"

namespace flagbal {

using json = nlohmann::json;

json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const json& j);

Graph graph_from_json(const json& j);

/// Accepts either a complex or a graph (read as its independence complex).
SimplicialComplex complex_or_graph_from_json(const json& j);

json to_json(const CmCertificate& cert);

json to_json(const RegularSequenceCertificate& cert);
RegularSequenceCertificate certificate_from_json(const json& j);

/// Integral values as JSON integers when they fit, otherwise "a/b" strings.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

struct EghReportOptions
{
    std::optional<int> max_degree;
    int budget = default_hochster_budget;
};

json to_json(const EghResult& result, const Field& field, const EghReportOptions& options);
json to_json(const BalanceReport& report);

/// f/h-vectors, dimension, flagness, height, Stanley-Reisner ideal, homology and CM certificate.
json analyze_report(const SimplicialComplex& complex, const Field& field);

/// Parses text; input_error carries line and column on malformed JSON.
json parse_json(const std::string& text);

} // namespace flagbal

// flagbal: command-line front end.
//
//   flagbal analyze complex.json       f/h-vectors, height, flagness, CM certificate
//   flagbal regseq  ideal.json         regular sequence x_i*l_i with certificate
//   flagbal egh     ideal.json         lex-plus-squares ideal with the same Hilbert function
//   flagbal balance complex.json       CM flag complex -> CM balanced complex, same h-vector
//   flagbal verify  report.json        recheck any report emitted above
//
// Exit status: 0 success, 1 verified negative, 2 input error, 3 budget exceeded, 4 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flagbal/errors.hpp"
#include "flagbal/report.hpp"
#include "flagbal/verify.hpp"

using namespace flagbal;

namespace {

struct Settings
{
    std::string field = "q";
    std::uint64_t seed = 1;
    int retries = 8;
    std::optional<int> max_degree;
    int budget = default_hochster_budget;
    bool pretty = false;
    bool json_only = false;
    std::string out;
    std::vector<int> prime;
    std::string input = "-";
};

std::string read_input(const std::string& path)
{
    std::stringstream buffer;
    if (path == "-")
        buffer << std::cin.rdbuf();
    else
    {
        std::ifstream in(path);
        if (!in)
            throw input_error("cannot open '" + path + "'");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

std::string join(const std::vector<std::int64_t>& xs)
{
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + ")";
}

std::string summary(const json& r)
{
    std::ostringstream s;
    const auto kind = r.value("kind", std::string());
    auto row = [&](const std::string& key, const std::string& value) {
        s << "  " << key << std::string(key.size() < 18 ? 18 - key.size() : 1, ' ') << value << '\n';
    };
    s << kind << '\n';
    if (kind == "analyze")
    {
        row("dimension", r["dimension"].dump());
        row("f-vector", join(r["f_vector"].get<std::vector<std::int64_t>>()));
        row("h-vector", join(r["h_vector"].get<std::vector<std::int64_t>>()));
        row("height", r["height"].dump());
        row("flag", r["flag"].dump());
        row("cohen-macaulay", r["cm"]["cohen_macaulay"].dump() + " over " + r["field"].get<std::string>());
    }
    else if (kind == "regseq")
    {
        row("prime", r["prime"].dump());
        for (const auto& f : r["forms"])
            row("product", f["product"].get<std::string>());
        row("subsets checked", r["subsets_checked"].dump());
        row("seed", r["seed"].dump());
        row("mode", r["mode"].get<std::string>());
    }
    else if (kind == "egh")
    {
        row("squares", r["powers"].dump());
        row("generators", r["generators"].dump());
        row("series equal", r["series_equal"].dump());
        row("pd(S/I)", r["pd_source"].dump());
        row("pd(S/J)", r["pd_result"].dump());
    }
    else if (kind == "balance")
    {
        row("f-vector", join(r["f_vector"].get<std::vector<std::int64_t>>()));
        row("h-vector", join(r["h_vector"].get<std::vector<std::int64_t>>()));
        row("g", r["g"].dump());
        row("J'", r["artinian"]["generators"].dump());
        row("gamma f-vector", join(r["f_vector_gamma"].get<std::vector<std::int64_t>>()));
        row("gamma h-vector", join(r["h_vector_gamma"].get<std::vector<std::int64_t>>()));
        row("h equal", r["h_equal"].dump());
        row("balanced", r["balanced"].dump());
        row("gamma CM", r["cm_gamma"]["cohen_macaulay"].dump() + " over " + r["field"].get<std::string>());
    }
    else if (kind == "verify")
    {
        row("ok", r["ok"].dump());
        for (const auto& f : r["failures"])
            row("failure", f.get<std::string>());
    }
    return s.str();
}

void emit(const json& report, const Settings& settings)
{
    const std::string text = report.dump(2) + "\n";
    if (!settings.out.empty())
    {
        std::ofstream out(settings.out);
        if (!out)
            throw input_error("cannot write '" + settings.out + "'");
        out << text;
    }
    if (settings.pretty)
    {
        std::cout << summary(report);
        if (settings.out.empty())
            std::cerr << text;
    }
    else if (settings.out.empty())
        std::cout << text;
}

int run(const std::string& command, const Settings& settings)
{
    const Field field = Field::parse(settings.field);
    const json input = parse_json(read_input(settings.input));

    if (command == "analyze")
    {
        emit(analyze_report(complex_or_graph_from_json(input), field), settings);
        return 0;
    }
    if (command == "regseq")
    {
        RegseqOptions options;
        options.seed = settings.seed;
        options.retries = settings.retries;
        options.field = field;
        if (!settings.prime.empty())
        {
            VariableSet prime;
            for (int v : settings.prime)
                prime.push_back(v - 1);
            options.prime = prime;
        }
        emit(to_json(find_regular_sequence(ideal_from_json(input), options)), settings);
        return 0;
    }
    if (command == "egh")
    {
        EghOptions options{field, settings.max_degree, settings.budget};
        const auto result = egh_for_quadratic(ideal_from_json(input), options);
        emit(to_json(result, field, {settings.max_degree, settings.budget}), settings);
        return result.lpp.series_equal ? 0 : 1;
    }
    if (command == "balance")
    {
        try
        {
            const auto report = balance(complex_or_graph_from_json(input), field);
            emit(to_json(report), settings);
            return report.certified() ? 0 : 1;
        }
        catch (const not_cohen_macaulay& e)
        {
            emit({{"kind", "balance"}, {"error", "not_cohen_macaulay"}, {"cm_input", to_json(e.certificate())}},
                 settings);
            return 1;
        }
    }
    if (command == "verify")
    {
        const auto result = verify_report(input);
        emit({{"kind", "verify"},
              {"report_kind", input.value("kind", std::string())},
              {"ok", result.ok},
              {"failures", result.failures},
              {"details", result.details}},
             settings);
        return result.ok ? 0 : 1;
    }
    throw input_error("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Regular sequences, lex-plus-squares ideals and balanced complexes for quadratic monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    app.add_option("--field", settings.field, "Coefficient field: q or p:<prime>")->capture_default_str();
    app.add_option("--seed", settings.seed, "Sampling seed for regseq")->capture_default_str();
    app.add_option("--retries", settings.retries, "Resampling attempts before the matching-guided search")
        ->capture_default_str();
    app.add_option("--max-degree", settings.max_degree, "Construction degree bound for egh");
    app.add_option("--budget", settings.budget, "Largest variable count for Hochster enumeration")
        ->capture_default_str();
    app.add_option("--prime", settings.prime, "Minimal prime to use in regseq (1-based variables)")->delimiter(',');
    app.add_option("--out", settings.out, "Write the JSON report to this file");
    app.add_flag("--pretty", settings.pretty, "Print a summary table; JSON goes to --out or stderr");
    app.add_flag("--json", settings.json_only, "Print the JSON report only (default)");

    std::string command;
    for (const char* name : {"analyze", "regseq", "egh", "balance", "verify"})
    {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", settings.input, "Input JSON file, - for stdin");
        sub->final_callback([&command, name] { command = name; });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (settings.json_only)
        settings.pretty = false;

    try
    {
        return run(command, settings);
    }
    catch (const input_error& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    catch (const json::exception& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    catch (const unattainable_target& e)
    {
        std::cerr << "unattainable Hilbert function in degree " << e.degree() << ": " << e.what() << '\n';
        return 1;
    }
    catch (const budget_exceeded& e)
    {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}

#include "flagbal/pipeline.hpp"

#include "flagbal/errors.hpp"

namespace flagbal {

not_cohen_macaulay::not_cohen_macaulay(CmCertificate cert)
    : std::runtime_error("complex is not Cohen-Macaulay over " + cert.field.name()), cert_(std::move(cert))
{
}

HilbertData artinian_target(const std::vector<std::int64_t>& h, int g)
{
    HilbertData data;
    data.n = g;
    data.numerator = multiply(trimmed(h), one_minus_t_power(g));
    data.window = trimmed(h);
    return data;
}

bool same_h_vector(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    return trimmed(a) == trimmed(b);
}

BalanceReport balance(const SimplicialComplex& complex, const Field& field)
{
    if (complex.is_void())
        throw input_error("the void complex cannot be balanced");
    if (!is_flag(complex))
        throw input_error("complex is not flag: some minimal non-face does not have exactly two vertices");

    BalanceReport report;
    report.field = field;
    report.input = complex;
    report.cm_input = is_cohen_macaulay(complex, field);
    if (!report.cm_input.cohen_macaulay)
        throw not_cohen_macaulay(report.cm_input);
    report.f_vector = f_vector(complex);
    report.h_vector = h_vector(complex);

    const MonomialIdeal sr = stanley_reisner(complex);
    if (sr.is_zero())
    {
        // A simplex: nothing to do, every vertex gets its own colour.
        report.g = 0;
        report.artinian = MonomialIdeal::zero(0);
        report.construction.series_equal = true;
        report.polarized = Polarization{MonomialIdeal::zero(0), {}};
        report.gamma = complex;
        for (int v = 0; v < complex.vertex_count(); ++v)
            report.coloring.push_back(v + 1);
    }
    else
    {
        report.g = height(sr);
        const HilbertData target = artinian_target(report.h_vector, report.g);
        LppTarget lpp{report.g, std::vector<int>(static_cast<std::size_t>(report.g), 2), target};
        report.construction = construct_lex_plus_powers(lpp, lpp_degree_bound(target));
        report.artinian = report.construction.ideal;
        report.polarized = polarize(report.artinian);
        report.gamma = complex_of_ideal(report.polarized.ideal);
        report.coloring.assign(static_cast<std::size_t>(report.polarized.ideal.n()), 0);
        for (std::size_t i = 0; i < report.polarized.classes.size(); ++i)
            for (int v : report.polarized.classes[i])
                report.coloring[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    }

    report.f_vector_gamma = f_vector(report.gamma);
    report.h_vector_gamma = h_vector(report.gamma);
    report.h_equal = same_h_vector(report.h_vector, report.h_vector_gamma);
    report.balanced = check_balanced(report.gamma, report.coloring).has_value();
    report.cm_gamma = is_cohen_macaulay(report.gamma, field);
    return report;
}

} // namespace flagbal

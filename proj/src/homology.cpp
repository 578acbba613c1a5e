#include "flagbal/homology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include "flagbal/covers.hpp"
#include "flagbal/errors.hpp"

namespace flagbal {

std::int64_t ReducedBetti::operator()(int i) const
{
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(ranks_.size()))
        return 0;
    return ranks_[static_cast<std::size_t>(idx)];
}

std::vector<std::int64_t> ReducedBetti::nonnegative() const
{
    if (ranks_.size() <= 1)
        return {};
    return {ranks_.begin() + 1, ranks_.end()};
}

std::int64_t ReducedBetti::alternating_sum() const
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < ranks_.size(); ++i)
        s += (i % 2 ? 1 : -1) * ranks_[i];
    return s;
}

namespace {

std::vector<VertexSet> of_size(std::span<const VertexSet> faces, int k)
{
    std::vector<VertexSet> out;
    for (auto f : faces)
        if (f.size() == k)
            out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Matrix<std::int64_t> boundary_matrix(std::span<const VertexSet> faces, int k)
{
    const auto cols = of_size(faces, k);
    const auto rows = of_size(faces, k - 1);
    std::unordered_map<std::uint64_t, Eigen::Index> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_of.emplace(rows[r].bits(), static_cast<Eigen::Index>(r));

    Matrix<std::int64_t> m = Matrix<std::int64_t>::Zero(static_cast<Eigen::Index>(rows.size()),
                                                        static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
    {
        const auto vertices = cols[c].indices();
        for (std::size_t j = 0; j < vertices.size(); ++j)
        {
            auto it = row_of.find(cols[c].without(vertices[j]).bits());
            if (it == row_of.end())
                throw input_error("face list is not closed under subsets");
            m(it->second, static_cast<Eigen::Index>(c)) = (j % 2) ? -1 : 1;
        }
    }
    return m;
}

ReducedBetti reduced_homology(std::span<const VertexSet> faces, const Field& field)
{
    if (faces.empty())
        return ReducedBetti();
    int top = 0;
    for (auto f : faces)
        top = std::max(top, f.size());
    std::vector<std::int64_t> counts(static_cast<std::size_t>(top) + 1, 0);
    for (auto f : faces)
        ++counts[static_cast<std::size_t>(f.size())];

    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces.
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int s = 1; s <= top; ++s)
        ranks[static_cast<std::size_t>(s)] = rank(boundary_matrix(faces, s), field);

    std::vector<std::int64_t> betti(static_cast<std::size_t>(top) + 1, 0);
    for (int s = 0; s <= top; ++s)
        betti[static_cast<std::size_t>(s)] = counts[static_cast<std::size_t>(s)] - ranks[static_cast<std::size_t>(s)] -
                                             ranks[static_cast<std::size_t>(s) + 1];
    return ReducedBetti(std::move(betti));
}

ReducedBetti reduced_homology_ranks(const SimplicialComplex& complex, const Field& field)
{
    if (complex.is_void())
        throw input_error("reduced homology of the void complex is not defined here");
    const auto faces = complex.faces();
    return reduced_homology(faces, field);
}

CmCertificate is_cohen_macaulay(const SimplicialComplex& complex, const Field& field)
{
    if (complex.is_void())
        throw input_error("Cohen-Macaulay test on the void complex");
    CmCertificate cert;
    cert.field = field;
    for (auto face : complex.faces())
    {
        ++cert.faces_checked;
        const SimplicialComplex lk = complex.link(face);
        // A single facet is a simplex or {emptyset}: nothing below its dimension.
        if (lk.facets().size() <= 1)
            continue;
        const int dim = lk.dimension();
        const auto betti = reduced_homology_ranks(lk, field);
        for (int i = -1; i < dim; ++i)
            if (betti(i) != 0)
                cert.witnesses.push_back({face, i, betti(i)});
    }
    cert.cohen_macaulay = cert.witnesses.empty();
    return cert;
}

GradedBetti betti_hochster(const MonomialIdeal& ideal, const Field& field, int budget)
{
    if (!ideal.is_squarefree())
        throw input_error("Hochster's formula needs a squarefree ideal");
    const int n = ideal.n();
    if (n > budget || n > 62)
        throw budget_exceeded("Hochster enumeration over 2^" + std::to_string(n) + " subsets exceeds the budget of n <= " +
                              std::to_string(budget));
    std::vector<std::uint64_t> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(g.support());

    GradedBetti betti;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<VertexSet> faces;
    for (std::uint64_t sigma = 0; sigma < subsets; ++sigma)
    {
        // Nonzero Betti numbers sit on unions of generator supports.
        std::uint64_t covered = 0;
        for (auto g : gens)
            if ((g & sigma) == g)
                covered |= g;
        if (covered != sigma)
            continue;
        faces.clear();
        for (std::uint64_t tau = sigma;; tau = (tau - 1) & sigma)
        {
            if (std::none_of(gens.begin(), gens.end(), [tau](std::uint64_t g) { return (g & tau) == g; }))
                faces.emplace_back(tau);
            if (tau == 0)
                break;
        }
        const int size = std::popcount(sigma);
        const auto homology = reduced_homology(faces, field);
        for (int r = -1; r <= homology.top_degree(); ++r)
            if (const auto b = homology(r); b != 0)
                betti[{size - r - 1, size}] += b;
    }
    return betti;
}

GradedBetti betti_upper_koszul(const MonomialIdeal& ideal, const Field& field, std::size_t lattice_budget)
{
    GradedBetti betti{{{0, 0}, 1}};
    if (ideal.is_zero())
        return betti;
    const int n = ideal.n();
    std::set<Monomial> lattice(ideal.generators().begin(), ideal.generators().end());
    std::vector<Monomial> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty())
    {
        std::vector<Monomial> next;
        for (const auto& a : frontier)
            for (const auto& g : ideal.generators())
            {
                Monomial l = a.lcm(g);
                if (lattice.insert(l).second)
                {
                    if (lattice.size() > lattice_budget)
                        throw budget_exceeded("lcm lattice larger than " + std::to_string(lattice_budget));
                    next.push_back(std::move(l));
                }
            }
        frontier = std::move(next);
    }

    std::vector<VertexSet> faces;
    for (const auto& b : lattice)
    {
        const std::uint64_t support = b.support();
        faces.clear();
        for (std::uint64_t tau = support;; tau = (tau - 1) & support)
        {
            std::vector<int> e(b.exponents().begin(), b.exponents().end());
            for (int i = 0; i < n; ++i)
                if ((tau >> i) & 1u)
                    --e[static_cast<std::size_t>(i)];
            if (ideal.contains(Monomial(std::move(e))))
                faces.emplace_back(tau);
            if (tau == 0)
                break;
        }
        // beta_{i,b}(I) = dim H~_{i-1}(K^b), and beta_{i+1}(S/I) = beta_i(I).
        const auto homology = reduced_homology(faces, field);
        for (int r = -1; r <= homology.top_degree(); ++r)
            if (const auto v = homology(r); v != 0)
                betti[{r + 2, b.degree()}] += v;
    }
    return betti;
}

int projective_dimension(const GradedBetti& betti)
{
    int pd = 0;
    for (const auto& [key, value] : betti)
        if (value != 0)
            pd = std::max(pd, key.first);
    return pd;
}

namespace {

constexpr int socle_candidate_limit = 64;

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b)
{
    std::vector<Monomial> gens;
    std::vector<const Monomial*> a_only, b_only;
    for (const auto& m : a.generators())
        b.contains(m) ? gens.push_back(m) : a_only.push_back(&m);
    for (const auto& m : b.generators())
        a.contains(m) ? gens.push_back(m) : b_only.push_back(&m);
    for (const auto* x : a_only)
        for (const auto* y : b_only)
            gens.push_back(x->lcm(*y));
    return MonomialIdeal(a.n(), std::move(gens));
}

} // namespace

std::optional<Monomial> socle_monomial(const MonomialIdeal& ideal)
{
    if (ideal.is_unit())
        return std::nullopt;
    if (ideal.n() == 0)
        return Monomial::one(0);
    // For stable ideals the socle is spanned by w / x_n with w a generator using
    // x_n, so try a few of those before intersecting colons.
    const int last = ideal.n() - 1;
    int tried = 0;
    for (const auto& w : ideal.generators())
    {
        if (w[last] == 0)
            continue;
        if (++tried > socle_candidate_limit)
            break;
        const Monomial u = w.colon_variable(last);
        bool socle = !ideal.contains(u);
        for (int i = 0; i < ideal.n() && socle; ++i)
            socle = ideal.contains(u.times(Monomial::variable(ideal.n(), i)));
        if (socle)
            return u;
    }
    // (I : m) is the intersection of the colons by single variables.
    MonomialIdeal annihilated = ideal.colon_variable(0);
    for (int i = 1; i < ideal.n() && annihilated != ideal; ++i)
        annihilated = intersect(annihilated, ideal.colon_variable(i));
    for (const auto& m : annihilated.generators())
        if (!ideal.contains(m))
            return m;
    return std::nullopt;
}

std::optional<int> linear_quotients_pd(const MonomialIdeal& ideal)
{
    if (ideal.is_zero() || ideal.is_unit())
        throw input_error("linear quotients need a proper nonzero ideal");
    if (ideal.n() > 64)
        throw budget_exceeded("linear quotients are tracked for at most 64 variables");
    const auto& gens = ideal.generators();
    const int n = ideal.n();
    int widest = 0;
    for (std::size_t j = 1; j < gens.size(); ++j)
    {
        // supports of the quotients lcm(u_i, u_j) / u_j; degree-one ones are the variables
        std::uint64_t variables = 0;
        std::vector<std::uint64_t> supports;
        for (std::size_t i = 0; i < j; ++i)
        {
            std::uint64_t support = 0;
            int degree = 0;
            for (int k = 0; k < n; ++k)
                if (const int e = gens[i][k] - gens[j][k]; e > 0)
                {
                    support |= std::uint64_t{1} << k;
                    degree += e;
                }
            if (degree == 1)
                variables |= support;
            else
                supports.push_back(support);
        }
        for (std::uint64_t support : supports)
            if ((support & variables) == 0)
                return std::nullopt;
        widest = std::max(widest, std::popcount(variables));
    }
    return widest + 1;
}

DepthAndPd depth_and_pd(const MonomialIdeal& ideal, const Field& field, int budget)
{
    if (ideal.is_unit())
        throw input_error("S/I is the zero module for the unit ideal");
    DepthAndPd out;
    if (ideal.is_squarefree())
    {
        out.pd = projective_dimension(betti_hochster(ideal, field, budget));
        out.method = "hochster";
    }
    else
    {
        const auto polarized = polarize(ideal);
        out.pd = projective_dimension(betti_hochster(polarized.ideal, field, budget));
        out.method = "hochster-polarized";
    }
    out.depth = ideal.n() - out.pd;
    return out;
}

} // namespace flagbal

#include "flagbal/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "flagbal/covers.hpp"
#include "flagbal/errors.hpp"
#include "flagbal/hilbert.hpp"

namespace flagbal {

VertexSet VertexSet::from_indices(const std::vector<int>& vertices)
{
    std::uint64_t bits = 0;
    for (int v : vertices)
    {
        if (v < 0 || v >= SimplicialComplex::max_vertices)
            throw input_error("vertex index " + std::to_string(v + 1) + " out of range");
        bits |= std::uint64_t{1} << v;
    }
    return VertexSet(bits);
}

VertexSet VertexSet::range(int count)
{
    return VertexSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
}

std::vector<int> VertexSet::indices() const
{
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

bool operator<(VertexSet a, VertexSet b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    std::uint64_t x = a.bits(), y = b.bits();
    while (x && y)
    {
        const int lx = std::countr_zero(x), ly = std::countr_zero(y);
        if (lx != ly)
            return lx < ly;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

SimplicialComplex::SimplicialComplex(int vertex_count) : vertex_count_(vertex_count)
{
    if (vertex_count < 0 || vertex_count > max_vertices)
        throw input_error("vertex count must lie in 0.." + std::to_string(max_vertices));
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<VertexSet> facets) : SimplicialComplex(vertex_count)
{
    const VertexSet all = VertexSet::range(vertex_count);
    for (auto f : facets)
        if (!f.is_subset_of(all))
            throw input_error("facet uses a vertex beyond the vertex count " + std::to_string(vertex_count));
    // Largest first, so a facet can only be contained in an earlier one.
    std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) { return b < a; });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto f : facets)
        if (std::none_of(facets_.begin(), facets_.end(), [f](VertexSet kept) { return f.is_subset_of(kept); }))
            facets_.push_back(f);
    std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dimension() const
{
    if (is_void())
        throw input_error("the void complex has no dimension");
    int d = 0;
    for (auto f : facets_)
        d = std::max(d, f.size());
    return d - 1;
}

bool SimplicialComplex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [this](VertexSet f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(VertexSet face) const
{
    return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.is_subset_of(f); });
}

std::vector<VertexSet> SimplicialComplex::faces() const
{
    std::unordered_set<std::uint64_t> seen;
    for (auto f : facets_)
    {
        const std::uint64_t full = f.bits();
        for (std::uint64_t sub = full;; sub = (sub - 1) & full)
        {
            seen.insert(sub);
            if (sub == 0)
                break;
        }
    }
    std::vector<VertexSet> out;
    out.reserve(seen.size());
    for (auto bits : seen)
        out.emplace_back(bits);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex SimplicialComplex::link(VertexSet face) const
{
    std::vector<VertexSet> rest;
    for (auto f : facets_)
        if (face.is_subset_of(f))
            rest.push_back(f.without(face));
    return SimplicialComplex(vertex_count_, std::move(rest));
}

SimplicialComplex SimplicialComplex::restriction(VertexSet vertices) const
{
    std::vector<VertexSet> rest;
    for (auto f : facets_)
        rest.push_back(f & vertices);
    return SimplicialComplex(vertex_count_, std::move(rest));
}

SimplicialComplex SimplicialComplex::cone() const
{
    std::vector<VertexSet> coned;
    for (auto f : facets_)
        coned.push_back(f.with(vertex_count_));
    return SimplicialComplex(vertex_count_ + 1, std::move(coned));
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex)
{
    const int d = complex.dimension() + 1;
    std::vector<std::int64_t> f(static_cast<std::size_t>(d) + 1, 0);
    for (auto face : complex.faces())
        ++f[static_cast<std::size_t>(face.size())];
    return f;
}

std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f)
{
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<std::int64_t> h(f.size(), 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i)
            h[static_cast<std::size_t>(k)] +=
                ((k - i) % 2 ? -1 : 1) * binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
    return h;
}

std::vector<std::int64_t> h_vector(const SimplicialComplex& complex)
{
    return h_from_f(f_vector(complex));
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex)
{
    const auto f = f_vector(complex);
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        chi += (i % 2 ? 1 : -1) * f[i];
    return chi;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex)
{
    if (complex.is_void())
        return {VertexSet()};
    std::vector<VertexSet> out;
    std::unordered_set<std::uint64_t> seen;
    for (auto face : complex.faces())
        for (int v = 0; v < complex.vertex_count(); ++v)
        {
            if (face.contains(v))
                continue;
            const VertexSet candidate = face.with(v);
            if (seen.contains(candidate.bits()) || complex.contains(candidate))
                continue;
            const auto members = candidate.indices();
            const bool minimal = std::all_of(members.begin(), members.end(),
                                             [&](int u) { return complex.contains(candidate.without(u)); });
            if (minimal)
            {
                seen.insert(candidate.bits());
                out.push_back(candidate);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

MonomialIdeal stanley_reisner(const SimplicialComplex& complex)
{
    const int n = complex.vertex_count();
    if (n == 0)
    {
        if (complex.is_void())
            throw input_error("the void complex on zero vertices has no Stanley-Reisner ideal");
        return MonomialIdeal::zero(0);
    }
    std::vector<Monomial> gens;
    for (auto nonface : minimal_nonfaces(complex))
    {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int v : nonface.indices())
            e[static_cast<std::size_t>(v)] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal)
{
    if (!ideal.is_squarefree())
        throw input_error("complex_of_ideal needs a squarefree ideal, got " + to_string(ideal));
    const int n = ideal.n();
    if (n > SimplicialComplex::max_vertices)
        throw budget_exceeded("complexes are limited to 64 vertices");
    if (ideal.is_zero())
        return SimplicialComplex::simplex(n);
    if (ideal.is_unit())
        return SimplicialComplex(n);
    const VertexSet all = VertexSet::range(n);
    std::vector<VertexSet> facets;
    for (const auto& prime : minimal_primes(ideal))
        facets.push_back(all.without(VertexSet::from_indices(prime)));
    return SimplicialComplex(n, std::move(facets));
}

MonomialIdeal edge_ideal(const Graph& graph)
{
    std::vector<Monomial> gens;
    for (auto [a, b] : graph.edges)
    {
        if (a < 0 || b < 0 || a >= graph.vertices || b >= graph.vertices)
            throw input_error("edge endpoint out of range");
        if (a == b)
            throw input_error("graph loops are not allowed (vertex " + std::to_string(a + 1) + ")");
        std::vector<int> e(static_cast<std::size_t>(graph.vertices), 0);
        e[static_cast<std::size_t>(a)] = e[static_cast<std::size_t>(b)] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(graph.vertices, std::move(gens));
}

SimplicialComplex independence_complex(const Graph& graph)
{
    return complex_of_ideal(edge_ideal(graph));
}

bool is_flag(const SimplicialComplex& complex)
{
    const auto nonfaces = minimal_nonfaces(complex);
    return std::all_of(nonfaces.begin(), nonfaces.end(), [](VertexSet s) { return s.size() == 2; });
}

std::optional<Coloring> check_balanced(const SimplicialComplex& complex, const std::optional<Coloring>& coloring)
{
    const int colors = complex.dimension() + 1;
    const int n = complex.vertex_count();
    VertexSet used;
    for (auto f : complex.facets())
        used = used | f;

    if (coloring)
    {
        if (static_cast<int>(coloring->size()) != n)
            return std::nullopt;
        for (int v = 0; v < n; ++v)
        {
            const int c = (*coloring)[static_cast<std::size_t>(v)];
            if (c < 1 || c > (used.contains(v) ? colors : std::max(colors, 1)))
                return std::nullopt;
        }
        for (auto f : complex.facets())
        {
            std::vector<bool> seen(static_cast<std::size_t>(colors) + 1, false);
            for (int v : f.indices())
            {
                const auto c = static_cast<std::size_t>((*coloring)[static_cast<std::size_t>(v)]);
                if (seen[c])
                    return std::nullopt;
                seen[c] = true;
            }
        }
        return coloring;
    }

    // Proper coloring of the 1-skeleton; faces are cliques there.
    std::vector<std::uint64_t> adjacent(static_cast<std::size_t>(n), 0);
    for (auto f : complex.facets())
        for (int v : f.indices())
            adjacent[static_cast<std::size_t>(v)] |= f.without(v).bits();
    std::vector<int> order = used.indices();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(adjacent[static_cast<std::size_t>(a)]) > std::popcount(adjacent[static_cast<std::size_t>(b)]);
    });
    Coloring result(static_cast<std::size_t>(n), 1);
    std::vector<int> assigned(static_cast<std::size_t>(n), 0);
    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == order.size())
            return true;
        const int v = order[k];
        for (int c = 1; c <= colors; ++c)
        {
            bool clash = false;
            for (std::uint64_t nb = adjacent[static_cast<std::size_t>(v)]; nb && !clash; nb &= nb - 1)
                clash = assigned[static_cast<std::size_t>(std::countr_zero(nb))] == c;
            if (clash)
                continue;
            assigned[static_cast<std::size_t>(v)] = c;
            if (place(k + 1))
                return true;
            assigned[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    if (!place(0))
        return std::nullopt;
    for (int v : order)
        result[static_cast<std::size_t>(v)] = assigned[static_cast<std::size_t>(v)];
    return result;
}

} // namespace flagbal

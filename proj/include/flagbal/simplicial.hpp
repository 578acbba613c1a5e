#pragma once

/**
 * Finite simplicial complexes on at most 64 vertices, stored by their facets.
 *
 * Faces are vertex bitmasks. Vertices are 0-based internally; every text or
 * JSON rendering is 1-based.
 */

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flagbal/monomial.hpp"

namespace flagbal {

class VertexSet
{
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    static VertexSet from_indices(const std::vector<int>& vertices);
    static VertexSet range(int count);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & other.bits_) == bits_; }

    std::vector<int> indices() const;

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet without(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    /// Orders by size, then by the sorted vertex lists.
    friend bool operator<(VertexSet a, VertexSet b);

private:
    std::uint64_t bits_ = 0;
};

class SimplicialComplex
{
public:
    static constexpr int max_vertices = 64;

    /// The void complex (no faces at all) on `vertex_count` vertices.
    explicit SimplicialComplex(int vertex_count = 0);
    /// Keeps the inclusion-maximal sets among `facets`.
    SimplicialComplex(int vertex_count, std::vector<VertexSet> facets);

    /// The complex {emptyset}.
    static SimplicialComplex empty_face(int vertex_count) { return {vertex_count, {VertexSet()}}; }
    static SimplicialComplex simplex(int vertex_count) { return {vertex_count, {VertexSet::range(vertex_count)}}; }

    int vertex_count() const { return vertex_count_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    /// Maximum facet size minus one; -1 for {emptyset}. Throws input_error on the void complex.
    int dimension() const;
    bool is_pure() const;
    bool contains(VertexSet face) const;

    /// Every face, sorted by VertexSet ordering.
    std::vector<VertexSet> faces() const;

    SimplicialComplex link(VertexSet face) const;
    SimplicialComplex restriction(VertexSet vertices) const;
    /// Cone with apex vertex_count (one more vertex).
    SimplicialComplex cone() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int vertex_count_ = 0;
    std::vector<VertexSet> facets_;
};

/// (f_{-1}, f_0, ..., f_{d-1}).
std::vector<std::int64_t> f_vector(const SimplicialComplex& complex);

/// (h_0, ..., h_d) with d = dim + 1.
std::vector<std::int64_t> h_vector(const SimplicialComplex& complex);

/// h-vector from an f-vector of length d + 1.
std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f);

/// Reduced Euler characteristic -f_{-1} + f_0 - f_1 + ...
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

/// Stanley-Reisner ideal: generated by the minimal non-faces.
MonomialIdeal stanley_reisner(const SimplicialComplex& complex);

/// Inverse of stanley_reisner; requires a squarefree ideal.
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal);

/// Minimal non-faces of the complex.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

struct Graph
{
    int vertices = 0;
    /// 0-based endpoint pairs.
    std::vector<std::pair<int, int>> edges;
};

MonomialIdeal edge_ideal(const Graph& graph);
SimplicialComplex independence_complex(const Graph& graph);
bool is_flag(const SimplicialComplex& complex);

/// colors[v] in 1..dim+1 for every vertex v.
using Coloring = std::vector<int>;

/// Verifies the supplied coloring, or searches for a proper (dim + 1)-coloring
/// of the 1-skeleton. Empty result means no balanced coloring exists (or the
/// supplied one is invalid).
std::optional<Coloring> check_balanced(const SimplicialComplex& complex,
                                       const std::optional<Coloring>& coloring = std::nullopt);

} // namespace flagbal

#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// algorithm it is used to check: Hilbert functions come from enumerating
// standard monomials, covers from enumerating all subsets, ranks from
// division-based elimination over Q or bit elimination over F_2, lex-plus-powers
// ideals from filtering whole slices against explicit divisibility.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flagbal/monomial.hpp"
#include "flagbal/simplicial.hpp"

namespace oracle {

using flagbal::Monomial;
using flagbal::MonomialIdeal;
using flagbal::SimplicialComplex;
using flagbal::VertexSet;
using Rational = boost::multiprecision::cpp_rational;

inline void all_monomials(int n, int d, std::vector<int>& e, int var, std::vector<Monomial>& out)
{
    if (var == n - 1)
    {
        e[static_cast<std::size_t>(var)] = d;
        out.emplace_back(e);
        return;
    }
    for (int k = 0; k <= d; ++k)
    {
        e[static_cast<std::size_t>(var)] = k;
        all_monomials(n, d - k, e, var + 1, out);
    }
}

inline std::vector<Monomial> monomials_of_degree(int n, int d)
{
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    all_monomials(n, d, e, 0, out);
    return out;
}

/// dim_K (S/I)_d for d = 0..max_degree by counting standard monomials.
inline std::vector<std::int64_t> hilbert_window(const MonomialIdeal& ideal, int max_degree)
{
    std::vector<std::int64_t> out;
    for (int d = 0; d <= max_degree; ++d)
    {
        std::int64_t count = 0;
        for (const auto& m : monomials_of_degree(ideal.n(), d))
        {
            bool inside = false;
            for (const auto& g : ideal.generators())
            {
                bool divides = true;
                for (int i = 0; i < ideal.n(); ++i)
                    divides = divides && g[i] <= m[i];
                inside = inside || divides;
            }
            count += inside ? 0 : 1;
        }
        out.push_back(count);
    }
    return out;
}

/// Minimal vertex covers of the generator supports, by checking every subset.
inline std::set<std::vector<int>> covers(const MonomialIdeal& ideal)
{
    const int n = ideal.n();
    std::vector<std::uint32_t> all;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
    {
        bool ok = true;
        for (const auto& g : ideal.generators())
        {
            bool hit = false;
            for (int i = 0; i < n; ++i)
                hit = hit || (((s >> i) & 1u) && g[i] > 0);
            ok = ok && hit;
        }
        if (ok)
            all.push_back(s);
    }
    std::set<std::vector<int>> out;
    for (auto s : all)
    {
        bool minimal = std::none_of(all.begin(), all.end(), [s](std::uint32_t t) { return t != s && (t & s) == t; });
        if (!minimal)
            continue;
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1u)
                v.push_back(i);
        out.insert(v);
    }
    return out;
}

/// Rank over Q by Gauss-Jordan elimination with exact rationals.
inline long rank_rational(std::vector<std::vector<Rational>> m)
{
    long rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c)
    {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[static_cast<std::size_t>(rank)]);
        const auto& pivot = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < rows; ++r)
        {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0)
                continue;
            const Rational f = m[r][c] / pivot[c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * pivot[k];
        }
        ++rank;
    }
    return rank;
}

/// Rank over F_2 with 64-bit row masks (at most 64 columns per block handled by vectors).
inline long rank_f2(const std::vector<std::vector<int>>& m)
{
    std::vector<std::vector<std::uint64_t>> rows;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    const std::size_t words = (cols + 63) / 64;
    for (const auto& row : m)
    {
        std::vector<std::uint64_t> bits(words, 0);
        for (std::size_t c = 0; c < cols; ++c)
            if (row[c] % 2 != 0)
                bits[c / 64] |= std::uint64_t{1} << (c % 64);
        rows.push_back(bits);
    }
    long rank = 0;
    for (std::size_t c = 0; c < cols; ++c)
    {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        auto it = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[w] & bit; });
        if (it == rows.end())
            continue;
        std::iter_swap(rows.begin() + rank, it);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && (rows[r][w] & bit))
                for (std::size_t k = 0; k < words; ++k)
                    rows[r][k] ^= rows[static_cast<std::size_t>(rank)][k];
        ++rank;
    }
    return rank;
}

/// Faces by testing every vertex subset against the facets.
inline std::vector<std::vector<int>> faces_by_subsets(const SimplicialComplex& c)
{
    std::vector<std::vector<int>> out;
    const int n = c.vertex_count();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    {
        bool face = false;
        for (auto f : c.facets())
            face = face || (s & f.bits()) == s;
        if (!face)
            continue;
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1u)
                v.push_back(i);
        out.push_back(v);
    }
    return out;
}

/// Reduced Betti numbers beta~_{-1..dim}; characteristic 0 or 2.
inline std::vector<long> reduced_betti(const SimplicialComplex& c, bool over_f2)
{
    const auto faces = faces_by_subsets(c);
    std::size_t top = 0;
    for (const auto& f : faces)
        top = std::max(top, f.size());
    std::vector<std::vector<std::vector<int>>> by_size(top + 1);
    for (const auto& f : faces)
        by_size[f.size()].push_back(f);
    std::vector<long> ranks(top + 2, 0);
    for (std::size_t s = 1; s <= top; ++s)
    {
        const auto& lower = by_size[s - 1];
        const auto& upper = by_size[s];
        std::vector<std::vector<int>> m(lower.size(), std::vector<int>(upper.size(), 0));
        for (std::size_t c2 = 0; c2 < upper.size(); ++c2)
            for (std::size_t j = 0; j < upper[c2].size(); ++j)
            {
                auto face = upper[c2];
                face.erase(face.begin() + static_cast<long>(j));
                const auto row = std::find(lower.begin(), lower.end(), face) - lower.begin();
                m[static_cast<std::size_t>(row)][c2] = (j % 2) ? -1 : 1;
            }
        if (over_f2)
            ranks[s] = rank_f2(m);
        else
        {
            std::vector<std::vector<Rational>> q(m.size(), std::vector<Rational>(upper.size()));
            for (std::size_t r = 0; r < m.size(); ++r)
                for (std::size_t k = 0; k < upper.size(); ++k)
                    q[r][k] = m[r][k];
            ranks[s] = rank_rational(q);
        }
    }
    std::vector<long> betti;
    for (std::size_t s = 0; s <= top; ++s)
        betti.push_back(static_cast<long>(by_size[s].size()) - ranks[s] - ranks[s + 1]);
    return betti;
}

/// pd(S/I) for squarefree I: Hochster over every subset, restrictions built from facets.
inline int hochster_pd(const MonomialIdeal& ideal, const SimplicialComplex& delta, bool over_f2 = false)
{
    int pd = 0;
    const int n = ideal.n();
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << n); ++sigma)
    {
        const auto restricted = delta.restriction(VertexSet(sigma));
        const auto betti = reduced_betti(restricted, over_f2);
        const int size = std::popcount(sigma);
        for (std::size_t k = 0; k < betti.size(); ++k)
            if (betti[k] != 0)
                pd = std::max(pd, size - (static_cast<int>(k) - 1) - 1);
    }
    return pd;
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int gens, int max_degree)
{
    std::uniform_int_distribution<int> var(0, n - 1), deg(1, max_degree);
    std::vector<Monomial> out;
    for (int k = 0; k < gens; ++k)
    {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        const int d = deg(rng);
        for (int j = 0; j < d; ++j)
            ++e[static_cast<std::size_t>(var(rng))];
        out.emplace_back(e);
    }
    return MonomialIdeal(n, out);
}

/// Random quadratic monomial ideal; `squarefree_only` excludes squares x_i^2.
inline MonomialIdeal random_quadratic(std::mt19937_64& rng, int n, int gens, bool squarefree_only)
{
    std::uniform_int_distribution<int> var(0, n - 1);
    std::vector<Monomial> out;
    for (int k = 0; k < gens; ++k)
    {
        int a = var(rng), b = var(rng);
        if (squarefree_only && n > 1)
            while (a == b)
                b = var(rng);
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        ++e[static_cast<std::size_t>(a)];
        ++e[static_cast<std::size_t>(b)];
        out.emplace_back(e);
    }
    return MonomialIdeal(n, out);
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, int n, int facets)
{
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
    std::vector<VertexSet> fs;
    for (int k = 0; k < facets; ++k)
        fs.emplace_back(pick(rng));
    return SimplicialComplex(n, fs);
}

/// Lex-plus-powers ideal reaching the Hilbert function hf[0..D]: in each degree list
/// every monomial, drop the powers' multiples, and take lex-first non-multiples.
/// Empty when some degree asks for more than is left.
inline std::optional<MonomialIdeal> lex_plus_powers(int n, const std::vector<int>& powers,
                                                    const std::vector<std::int64_t>& hf)
{
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < powers.size(); ++i)
        gens.push_back(Monomial::variable(n, static_cast<int>(i), powers[i]));
    const std::size_t fixed = gens.size();
    for (int d = 0; d < static_cast<int>(hf.size()); ++d)
    {
        auto slice = monomials_of_degree(n, d);
        std::sort(slice.begin(), slice.end(), std::greater<>());
        std::vector<Monomial> outside;
        std::int64_t in_powers = 0;
        for (const auto& m : slice)
        {
            const bool by_power = std::any_of(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(fixed),
                                              [&](const Monomial& p) { return p.divides(m); });
            const bool by_lex = std::any_of(gens.begin() + static_cast<std::ptrdiff_t>(fixed), gens.end(),
                                            [&](const Monomial& p) { return p.divides(m); });
            in_powers += by_power;
            if (!by_power && !by_lex)
                outside.push_back(m);
        }
        const std::int64_t picks =
            static_cast<std::int64_t>(outside.size()) - hf[static_cast<std::size_t>(d)];
        if (picks < 0)
            return std::nullopt;
        gens.insert(gens.end(), outside.begin(), outside.begin() + picks);
    }
    return MonomialIdeal(n, gens);
}

} // namespace oracle

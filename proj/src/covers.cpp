#include "flagbal/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "flagbal/errors.hpp"

namespace flagbal {

namespace {

void branch_covers(const std::vector<std::uint64_t>& edges, std::uint64_t chosen, std::vector<std::uint64_t>& found)
{
    // Any superset of a recorded cover cannot lead to a new minimal one.
    for (std::uint64_t c : found)
        if ((c & chosen) == c)
            return;
    auto open = std::find_if(edges.begin(), edges.end(), [chosen](std::uint64_t e) { return (e & chosen) == 0; });
    if (open == edges.end())
    {
        // Drop recorded covers that this one refines.
        std::erase_if(found, [chosen](std::uint64_t c) { return (c & chosen) == chosen; });
        found.push_back(chosen);
        return;
    }
    for (std::uint64_t rest = *open; rest; rest &= rest - 1)
        branch_covers(edges, chosen | (rest & -rest), found);
}

VariableSet to_indices(std::uint64_t mask)
{
    VariableSet out;
    for (; mask; mask &= mask - 1)
        out.push_back(std::countr_zero(mask));
    return out;
}

} // namespace

std::vector<VariableSet> minimal_primes(const MonomialIdeal& ideal)
{
    if (ideal.is_zero())
        throw input_error("the zero ideal has no proper minimal primes to report");
    if (ideal.is_unit())
        throw input_error("the unit ideal has no minimal primes");
    std::vector<std::uint64_t> edges;
    for (const auto& g : ideal.generators())
        edges.push_back(g.support());
    // Small edges first keeps the branching narrow.
    std::sort(edges.begin(), edges.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    std::vector<std::uint64_t> found;
    branch_covers(edges, 0, found);

    std::vector<VariableSet> primes;
    for (std::uint64_t c : found)
        primes.push_back(to_indices(c));
    std::sort(primes.begin(), primes.end(), [](const VariableSet& a, const VariableSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return primes;
}

int height(const MonomialIdeal& ideal)
{
    return static_cast<int>(minimal_primes(ideal).front().size());
}

VariableSet default_prime(const MonomialIdeal& ideal)
{
    return minimal_primes(ideal).front();
}

Polarization polarize(const MonomialIdeal& ideal)
{
    const int n = ideal.n();
    std::vector<int> widths(static_cast<std::size_t>(n), 1);
    for (const auto& g : ideal.generators())
        for (int i = 0; i < n; ++i)
            widths[static_cast<std::size_t>(i)] = std::max(widths[static_cast<std::size_t>(i)], g[i]);

    Polarization out{MonomialIdeal(0), {}};
    int next = 0;
    for (int w : widths)
    {
        std::vector<int> cls(static_cast<std::size_t>(w));
        for (int& v : cls)
            v = next++;
        out.classes.push_back(std::move(cls));
    }
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators())
    {
        std::vector<int> e(static_cast<std::size_t>(next), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < g[i]; ++j)
                e[static_cast<std::size_t>(out.classes[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] = 1;
        gens.emplace_back(std::move(e));
    }
    out.ideal = MonomialIdeal(next, std::move(gens));
    return out;
}

} // namespace flagbal

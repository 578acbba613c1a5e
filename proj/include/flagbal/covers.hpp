#pragma once

#include <vector>

#include "flagbal/monomial.hpp"

namespace flagbal {

/// Sorted 0-based variable indices.
using VariableSet = std::vector<int>;

/// Minimal primes (x_i : i in A) of a monomial ideal, i.e. the minimal vertex
/// covers of its support hypergraph. Sorted by size, then lexicographically.
/// Throws input_error for the zero and the unit ideal.
std::vector<VariableSet> minimal_primes(const MonomialIdeal& ideal);

/// Minimum size of a minimal prime.
int height(const MonomialIdeal& ideal);

/// Lexicographically smallest minimal prime of minimum size.
VariableSet default_prime(const MonomialIdeal& ideal);

/// Standard polarization together with its variable classes.
struct Polarization
{
    MonomialIdeal ideal;
    /// classes[i] lists the polarization variables x_{i,1}, x_{i,2}, ... of x_i.
    std::vector<std::vector<int>> classes;
};

/// Each x_i gets max(1, largest exponent of x_i among generators) new variables,
/// numbered consecutively by class; x_i^a becomes x_{i,1} ... x_{i,a}.
Polarization polarize(const MonomialIdeal& ideal);

} // namespace flagbal

#pragma once

#include "ideal_lab/index_set.hpp"
#include "ideal_lab/rootsys.hpp"

#include <string>
#include <vector>

namespace ideal_lab {

// An upper-closed subset of the positive roots, with its complement cached.
struct Ideal {
  IndexSet members;
  IndexSet complement;
};

// Height census of the complement and its dual partition.
struct ExponentProfile {
  std::vector<int> lambda;     // lambda[i-1] = #{alpha in I^c : ht(alpha) = i}, trailing zeros stripped
  int k = 0;                   // lambda_1 = number of simple roots in I^c
  std::vector<int> exponents;  // m_1 <= ... <= m_k, the dual partition
};

// Every upper-closed subset exactly once, including the empty set and all of
// Phi+, ordered by (|I|, bitset).
std::vector<Ideal> enumerate_ideals(const RootSystem& rs);

Ideal make_ideal(const RootSystem& rs, const IndexSet& members);       // asserts upper-closed
Ideal ideal_from_generators(const RootSystem& rs, const IndexSet& g);  // upper-closes g

ExponentProfile ideal_exponents(const RootSystem& rs, const Ideal& ideal);

// { "type": ..., "ideal_roots": [...], "lambda": [...], "exponents": [...] }
std::string ideal_json(const RootSystem& rs, const Ideal& ideal);

}  // namespace ideal_lab

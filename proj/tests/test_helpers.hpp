#pragma once

// Brute-force oracles used across the test suite.  Each reimplements the
// quantity under test from definitions, with no shared code paths with the
// library algorithms beyond the type definitions themselves.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "ideal_lab/arrangement.hpp"
#include "ideal_lab/ideals.hpp"
#include "ideal_lab/poly.hpp"
#include "ideal_lab/rootsys.hpp"

namespace test_oracle {

using ideal_lab::Arrangement;
using ideal_lab::BigInt;
using ideal_lab::BigRational;
using ideal_lab::Ideal;
using ideal_lab::IndexSet;
using ideal_lab::IntPolynomial;
using ideal_lab::RootSystem;

// every root as the reflection orbit of the simple roots, using only the
// Cartan matrix; returns the positive half
inline std::set<std::vector<int>> reflection_orbit_positives(const RootSystem& rs) {
  const int n = rs.rank();
  auto reflect = [&](std::vector<int> v, int j) {
    int pairing = 0;
    for (int i = 0; i < n; ++i) pairing += v[i] * rs.cartan(i, j);
    v[j] -= pairing;
    return v;
  };
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    all.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier)
      for (int j = 0; j < n; ++j) {
        auto w = reflect(v, j);
        if (all.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  std::set<std::vector<int>> positives;
  for (const auto& v : all) {
    bool pos = std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
    bool neg = std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
    if (!pos && !neg) throw std::runtime_error("oracle: mixed-sign root");
    if (pos) positives.insert(v);
  }
  return positives;
}

// the Weyl group as the multiplicative closure of the simple-reflection
// matrices acting on simple-root coordinates
inline std::set<std::vector<int>> weyl_matrix_closure(const RootSystem& rs) {
  const int n = rs.rank();
  auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
    return c;
  };
  std::vector<std::vector<int>> gens;
  for (int s = 0; s < n; ++s) {
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^v> alpha_i
    for (int j = 0; j < n; ++j) m[s * n + j] -= rs.cartan(j, s);
    gens.push_back(m);
  }
  std::set<std::vector<int>> all;
  std::vector<int> id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  all.insert(id);
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        auto p = mul(m, g);
        if (all.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return all;
}

// matrix of a Weyl element in simple-root coordinates, column j = image of
// alpha_j, read off the signed image codes
template <class WeylGroupT>
std::vector<int> element_matrix(const RootSystem& rs, const WeylGroupT& W, uint32_t e) {
  const int n = rs.rank();
  std::vector<int> m(n * n, 0);
  for (int j = 0; j < n; ++j) {
    int code = W.image_code(e, j);
    const auto& coords = rs.root(std::abs(code) - 1).coords;
    for (int i = 0; i < n; ++i) m[i * n + j] = (code > 0 ? 1 : -1) * coords[i];
  }
  return m;
}

inline std::vector<IndexSet> brute_force_ideals(const RootSystem& rs) {
  const int N = rs.num_positive_roots();
  if (N > 20) throw std::runtime_error("oracle: too many roots for subset filter");
  std::vector<IndexSet> out;
  for (uint32_t mask = 0; mask < (1u << N); ++mask) {
    IndexSet s;
    for (int i = 0; i < N; ++i)
      if (mask >> i & 1) s.set(i);
    if (rs.is_upper_closed(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

// S of Weyl type inside I^c: S and I^c - S are both closed under root
// addition within I^c
inline std::vector<IndexSet> brute_force_weyl_type(const RootSystem& rs, const Ideal& ideal) {
  std::vector<int> roots;
  ideal.complement.for_each([&](int i) { roots.push_back(i); });
  const int m = static_cast<int>(roots.size());
  if (m > 20) throw std::runtime_error("oracle: complement too large for subset filter");

  auto closed = [&](const IndexSet& s) {
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        if (!s.test(roots[a]) || !s.test(roots[b])) continue;
        int sum = rs.sum(roots[a], roots[b]);
        if (sum >= 0 && ideal.complement.test(sum) && !s.test(sum)) return false;
      }
    return true;
  };

  std::vector<IndexSet> out;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    IndexSet s;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) s.set(roots[i]);
    if (closed(s) && closed(ideal.complement.minus(s))) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

inline int rational_rank(std::vector<std::vector<BigRational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      BigRational f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// chi(t) = sum over subsets B of (-1)^|B| t^{dim of the intersection of B}
inline IntPolynomial whitney_char_poly(const Arrangement& arr) {
  const int m = static_cast<int>(arr.normals.size());
  if (m > 16) throw std::runtime_error("oracle: too many hyperplanes for Whitney sum");
  std::vector<BigInt> coeffs(arr.ambient_dim + 1, 0);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::vector<BigRational>> rows;
    for (int h = 0; h < m; ++h)
      if (mask >> h & 1) {
        std::vector<BigRational> row;
        for (long long v : arr.normals[h]) row.emplace_back(v);
        rows.push_back(std::move(row));
      }
    int dim = arr.ambient_dim - rational_rank(std::move(rows));
    coeffs[dim] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  return IntPolynomial(std::move(coeffs));
}

// dual of a weakly decreasing partition
inline std::vector<int> dual_partition(const std::vector<int>& lambda) {
  std::vector<int> out;
  int maxv = lambda.empty() ? 0 : lambda[0];
  for (int j = 1; j <= maxv; ++j) {
    int count = 0;
    for (int v : lambda)
      if (v >= j) ++count;
    out.push_back(count);
  }
  return out;
}

// positive roots of the parent lying in the span of simples 2..n
inline IndexSet tail_subsystem_mask(const RootSystem& rs) {
  IndexSet mask;
  for (int i = 0; i < rs.num_positive_roots(); ++i)
    if (rs.root(i).coords[0] == 0) mask.set(i);
  return mask;
}

// ideal arrangement of I restricted to the tail subsystem, written in the
// coordinates of simples 2..n
inline Arrangement tail_ideal_arrangement(const RootSystem& rs, const Ideal& ideal) {
  Arrangement arr;
  arr.ambient_dim = rs.rank() - 1;
  IndexSet mask = tail_subsystem_mask(rs);
  (mask & ideal.complement).for_each([&](int a) {
    std::vector<long long> row;
    for (int j = 1; j < rs.rank(); ++j) row.push_back(rs.pairing(a, j));
    arr.normals.push_back(std::move(row));
    arr.labels.push_back(a);
    arr.order_hint.push_back(rs.height(a));
  });
  return arr;
}

}  // namespace test_oracle

#include "ideal_lab/ideals.hpp"

#include <algorithm>
#include <cassert>

#include "ideal_lab/errors.hpp"

#include "json.hpp"

namespace ideal_lab {

std::vector<Ideal> enumerate_ideals(const RootSystem& rs) {
  const int n = rs.num_positive_roots();
  const IndexSet all = rs.all_roots_mask();
  std::vector<IndexSet> out;

  // Walk roots in decreasing index order (heights are ascending by index),
  // so every root strictly above the current one is already decided; a root
  // may join only when all of those joined.
  IndexSet current;
  auto dfs = [&](auto&& self, int i) -> void {
    if (i < 0) {
      out.push_back(current);
      return;
    }
    self(self, i - 1);
    IndexSet strictly_above = rs.above(i);
    strictly_above.reset(i);
    if (strictly_above.is_subset_of(current)) {
      current.set(i);
      self(self, i - 1);
      current.reset(i);
    }
  };
  dfs(dfs, n - 1);

  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  std::vector<Ideal> ideals;
  ideals.reserve(out.size());
  for (const IndexSet& s : out) ideals.push_back(Ideal{s, all.minus(s)});
  return ideals;
}

Ideal make_ideal(const RootSystem& rs, const IndexSet& members) {
  if (!rs.is_upper_closed(members)) throw Error("set of roots is not upper-closed");
  return Ideal{members, rs.all_roots_mask().minus(members)};
}

Ideal ideal_from_generators(const RootSystem& rs, const IndexSet& g) {
  IndexSet members = rs.upper_closure(g);
  return Ideal{members, rs.all_roots_mask().minus(members)};
}

ExponentProfile ideal_exponents(const RootSystem& rs, const Ideal& ideal) {
  ExponentProfile p;
  std::vector<int> census(rs.max_height(), 0);
  ideal.complement.for_each([&](int i) { ++census[rs.height(i) - 1]; });
  while (!census.empty() && census.back() == 0) census.pop_back();
  p.lambda = census;
  p.k = census.empty() ? 0 : census[0];
  for (int i = 1; i <= p.k; ++i) {
    int m = 0;
    for (int l : p.lambda)
      if (l >= p.k - i + 1) ++m;
    p.exponents.push_back(m);
  }
  return p;
}

std::string ideal_json(const RootSystem& rs, const Ideal& ideal) {
  nlohmann::ordered_json j;
  j["type"] = rs.type().name();
  std::vector<int> roots;
  ideal.members.for_each([&](int i) { roots.push_back(i); });
  j["ideal_roots"] = roots;
  ExponentProfile p = ideal_exponents(rs, ideal);
  j["lambda"] = p.lambda;
  j["exponents"] = p.exponents;
  return j.dump();
}

}  // namespace ideal_lab

#include "ideal_lab/weylcomb.hpp"

#include "ideal_lab/bitset_set.hpp"
#include "ideal_lab/errors.hpp"

#include <algorithm>
#include <cassert>

#include "json.hpp"

namespace ideal_lab {

namespace {

std::vector<IndexSet> sorted_sets(BitsetSet& seen) {
  std::vector<IndexSet> out;
  out.reserve(seen.size());
  seen.for_each([&](const IndexSet& s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<IndexSet> weyl_type_sets_image(const WeylGroup& W, const Ideal& ideal) {
  BitsetSet seen(W.size());
  for (uint32_t e = 0; e < W.size(); ++e) seen.insert(W.inversions(e) & ideal.complement);
  return sorted_sets(seen);
}

std::vector<IndexSet> weyl_type_sets_direct(const RootSystem& rs, const Ideal& ideal) {
  if (ideal.complement.count() > 24)
    throw ComplementTooLargeError("direct Weyl-type enumeration needs |I^c| <= 24, got " +
                                  std::to_string(ideal.complement.count()));

  // complement roots in increasing height order = increasing index order
  std::vector<int> roots;
  ideal.complement.for_each([&](int i) { roots.push_back(i); });
  const int m = static_cast<int>(roots.size());
  std::vector<int> pos(rs.num_positive_roots(), -1);
  for (int i = 0; i < m; ++i) pos[roots[i]] = i;

  // decompositions roots[i] = roots[a] + roots[b] with both parts in I^c
  std::vector<std::vector<std::pair<int, int>>> decomp(m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      int s = rs.sum(roots[a], roots[b]);
      if (s >= 0 && pos[s] >= 0) decomp[pos[s]].push_back({a, b});
    }

  std::vector<IndexSet> out;
  std::vector<char> in(m, 0);
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == m) {
      IndexSet s;
      for (int j = 0; j < m; ++j)
        if (in[j]) s.set(roots[j]);
      out.push_back(s);
      return;
    }
    bool forced_in = false, forced_out = false;
    for (auto [a, b] : decomp[i]) {
      if (in[a] && in[b]) forced_in = true;
      if (!in[a] && !in[b]) forced_out = true;
    }
    if (forced_in && forced_out) return;
    if (!forced_in) {
      in[i] = 0;
      self(self, i + 1);
    }
    if (!forced_out) {
      in[i] = 1;
      self(self, i + 1);
      in[i] = 0;
    }
  };
  dfs(dfs, 0);

  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

std::vector<IndexSet> weyl_type_sets(const RootSystem& rs, const WeylGroup& W, const Ideal& ideal,
                                     WeylTypeMethod method) {
  return method == WeylTypeMethod::image ? weyl_type_sets_image(W, ideal)
                                         : weyl_type_sets_direct(rs, ideal);
}

bool is_weyl_type(const RootSystem& rs, const Ideal& ideal, const IndexSet& s) {
  if (!s.is_subset_of(ideal.complement)) return false;
  const IndexSet rest = ideal.complement.minus(s);
  std::vector<int> roots;
  ideal.complement.for_each([&](int i) { roots.push_back(i); });
  for (size_t a = 0; a < roots.size(); ++a)
    for (size_t b = a; b < roots.size(); ++b) {
      int sum = rs.sum(roots[a], roots[b]);
      if (sum < 0 || !ideal.complement.test(sum)) continue;
      if (s.test(roots[a]) && s.test(roots[b]) && !s.test(sum)) return false;
      if (rest.test(roots[a]) && rest.test(roots[b]) && !rest.test(sum)) return false;
    }
  return true;
}

IntPolynomial poincare_poly(const WeylGroup& W, const Ideal& ideal) {
  BitsetSet seen(W.size());
  std::vector<BigInt> coeffs(ideal.complement.count() + 1, 0);
  for (uint32_t e = 0; e < W.size(); ++e) {
    IndexSet s = W.inversions(e) & ideal.complement;
    if (seen.insert(s)) coeffs[s.count()] += 1;
  }
  return IntPolynomial(std::move(coeffs));
}

FactorizationReport make_factorization_report(const IntPolynomial& lhs, const IntPolynomial& rhs,
                                              int ideal_id) {
  FactorizationReport r;
  r.ideal_id = ideal_id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.equal = lhs == rhs;
  if (!r.equal) r.first_mismatch_degree = lhs.first_mismatch_degree(rhs);
  return r;
}

std::string factorization_report_json(const FactorizationReport& r) {
  nlohmann::ordered_json j;
  j["ideal"] = r.ideal_id;
  auto coeffs = [](const IntPolynomial& p) {
    std::vector<long long> out;
    for (const BigInt& c : p.coeffs()) out.push_back(c.convert_to<long long>());
    return out;
  };
  j["lhs_coeffs"] = coeffs(r.lhs);
  j["rhs_coeffs"] = coeffs(r.rhs);
  j["equal"] = r.equal;
  if (r.first_mismatch_degree)
    j["first_mismatch_degree"] = *r.first_mismatch_degree;
  else
    j["first_mismatch_degree"] = nullptr;
  return j.dump();
}

FactorizationReport check_poincare_factorization(const RootSystem& rs, const WeylGroup& W,
                                                 const Ideal& ideal, int ideal_id) {
  ExponentProfile p = ideal_exponents(rs, ideal);
  return make_factorization_report(poincare_poly(W, ideal), product_of_geometrics(p.exponents),
                                   ideal_id);
}

bool in_w_min(const WeylGroup& W, const Ideal& ideal, uint32_t e) {
  return W.neg_simple_preimages(e).is_subset_of(ideal.complement);
}

std::vector<uint32_t> w_min_elements(const WeylGroup& W, const Ideal& ideal) {
  std::vector<uint32_t> out;
  for (uint32_t e = 0; e < W.size(); ++e)
    if (in_w_min(W, ideal, e)) out.push_back(e);
  return out;
}

IntPolynomial w_min_poincare(const WeylGroup& W, const Ideal& ideal) {
  std::vector<BigInt> coeffs(ideal.complement.count() + 1, 0);
  for (uint32_t e = 0; e < W.size(); ++e)
    if (in_w_min(W, ideal, e)) coeffs[(W.inversions(e) & ideal.complement).count()] += 1;
  return IntPolynomial(std::move(coeffs));
}

uint32_t minimal_representative(const RootSystem& rs, const WeylGroup& W, const Ideal& ideal,
                                const IndexSet& s) {
  if (!is_weyl_type(rs, ideal, s))
    throw NotWeylTypeError("the given subset fails the closure checks for this ideal");
  for (uint32_t e = 0; e < W.size(); ++e)
    if (in_w_min(W, ideal, e) && (W.inversions(e) & ideal.complement) == s) return e;
  throw Error("internal: no minimal representative found for a Weyl-type subset");
}

std::vector<uint32_t> coset_reps(const RootSystem& rs, const WeylGroup& W,
                                 const IndexSet& parabolic_simples) {
  const IndexSet sub = rs.parabolic_positive(parabolic_simples);
  std::vector<uint32_t> out;
  for (uint32_t e = 0; e < W.size(); ++e)
    if (!W.inversions(e).intersects(sub)) out.push_back(e);
  return out;
}

}  // namespace ideal_lab

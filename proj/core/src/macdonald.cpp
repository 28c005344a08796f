#include "ideal_lab/macdonald.hpp"

#include "ideal_lab/bitset_set.hpp"
#include "ideal_lab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <vector>

namespace ideal_lab {

namespace {

int image_height(const RootSystem& rs, const WeylGroup& W, uint32_t e, int k) {
  int c = W.image_code(e, k);
  return c > 0 ? rs.height(c - 1) : -rs.height(-c - 1);
}

// (1 - t0^{h+1}) / (1 - t0^h) for every height h in [-max..max], h != 0
struct FactorTable {
  int max_h;
  std::vector<BigRational> pos, neg;  // pos[h], neg[h] for h >= 1

  FactorTable(const BigInt& t0, int max_height) : max_h(max_height) {
    std::vector<BigInt> pw(max_height + 2);
    pw[0] = 1;
    for (int i = 1; i <= max_height + 1; ++i) pw[i] = pw[i - 1] * t0;
    auto power = [&](int e) {
      return e >= 0 ? BigRational(pw[e]) : BigRational(BigInt(1), pw[-e]);
    };
    pos.resize(max_height + 1);
    neg.resize(max_height + 1);
    for (int h = 1; h <= max_height; ++h) {
      BigRational den_pos = BigRational(1) - power(h);
      BigRational den_neg = BigRational(1) - power(-h);
      if (den_pos == 0 || den_neg == 0)
        throw EvaluationPoleError("vanishing denominator at sample point " + t0.str());
      pos[h] = (BigRational(1) - power(h + 1)) / den_pos;
      neg[h] = (BigRational(1) - power(-h + 1)) / den_neg;
    }
  }

  const BigRational& at(int h) const {
    assert(h != 0 && std::abs(h) <= max_h);
    return h > 0 ? pos[h] : neg[-h];
  }
};

}  // namespace

IntPolynomial macdonald_rhs(const WeylGroup& W, const IndexSet& r) {
  std::vector<BigInt> coeffs(r.count() + 1, 0);
  for (uint32_t e = 0; e < W.size(); ++e) coeffs[(W.inversions(e) & r).count()] += 1;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial macdonald_lhs(const RootSystem& rs, const WeylGroup& W, const IndexSet& r) {
  std::vector<int> roots;
  r.for_each([&](int i) { roots.push_back(i); });

  std::vector<std::pair<BigInt, BigRational>> points;
  for (int t0 = 2; t0 <= static_cast<int>(roots.size()) + 2; ++t0) {
    FactorTable table(BigInt(t0), rs.max_height());
    BigRational sum = 0;
    for (uint32_t e = 0; e < W.size(); ++e) {
      BigRational term = 1;
      for (int k : roots) {
        int h = image_height(rs, W, e, k);
        if (h == -1) {
          term = 0;  // numerator 1 - t0^0
          break;
        }
        term *= table.at(h);
      }
      sum += term;
    }
    points.push_back({BigInt(t0), sum});
  }
  return interpolate(points);
}

HighestRootIdealReport verify_uniform1(const RootSystem& rs, const WeylGroup& W) {
  const int theta = rs.highest_root();
  const Ideal ideal = make_ideal(rs, IndexSet::single(theta));
  HighestRootIdealReport rep;

  // complement roots by their pairing with the highest coroot
  IndexSet level1;
  ideal.complement.for_each([&](int i) {
    if (rs.pairing(i, theta) == 1) level1.set(i);
  });

  rep.pairing_ok = true;
  level1.for_each([&](int g) {
    std::vector<int> partner_coords(rs.rank());
    for (int c = 0; c < rs.rank(); ++c)
      partner_coords[c] = rs.root(theta).coords[c] - rs.root(g).coords[c];
    int partner = rs.find_root(partner_coords);
    if (partner < 0 || partner == g || !level1.test(partner)) rep.pairing_ok = false;
  });
  const int pairs = level1.count() / 2;
  if (level1.count() % 2 != 0) rep.pairing_ok = false;

  const std::vector<uint32_t> wmin = w_min_elements(W, ideal);
  std::vector<char> is_min(W.size(), 0);
  for (uint32_t e : wmin) is_min[e] = 1;

  rep.nonmin_half_ok = true;
  for (uint32_t e = 0; e < W.size(); ++e)
    if (!is_min[e] && (W.inversions(e) & level1).count() != pairs) rep.nonmin_half_ok = false;

  rep.nonmin_product_ok = true;
  {
    std::vector<int> l1;
    level1.for_each([&](int i) { l1.push_back(i); });
    for (int t0 = 2; t0 <= 4; ++t0) {
      FactorTable table(BigInt(t0), rs.max_height());
      BigRational expected = 1;
      for (int i = 0; i < pairs; ++i) expected *= t0;
      for (uint32_t e = 0; e < W.size(); ++e) {
        if (is_min[e]) continue;
        BigRational prod = 1;
        for (int k : l1) prod *= table.at(image_height(rs, W, e, k));
        if (prod != expected) rep.nonmin_product_ok = false;
      }
    }
  }

  rep.min_terms_vanish_ok = true;
  for (uint32_t e : wmin) {
    if (e == W.identity()) continue;
    bool vanishes = false;
    ideal.complement.for_each([&](int k) {
      if (image_height(rs, W, e, k) == -1) vanishes = true;
    });
    if (!vanishes) rep.min_terms_vanish_ok = false;
  }

  rep.macky_ok =
      macdonald_lhs(rs, W, ideal.complement) == macdonald_rhs(W, ideal.complement);

  const std::vector<IndexSet> sets = weyl_type_sets_image(W, ideal);
  {
    BitsetSet traces(wmin.size());
    size_t distinct = 0;
    for (uint32_t e : wmin)
      if (traces.insert(W.inversions(e) & ideal.complement)) ++distinct;
    rep.bijection_ok = distinct == wmin.size() && distinct == sets.size();
  }

  {
    // stabilizer parabolic of the highest root: simples pairing to zero
    IndexSet j;
    for (int s = 0; s < rs.rank(); ++s)
      if (rs.pairing(theta, s) == 0) j.set(s);
    const IndexSet sub = rs.parabolic_positive(j);
    std::vector<uint32_t> stab;
    for (uint32_t e = 0; e < W.size(); ++e)
      if (W.inversions(e).is_subset_of(sub)) stab.push_back(e);
    rep.cosets_ok = true;
    for (uint32_t e : wmin)
      for (uint32_t u : stab)
        if (!is_min[W.compose(e, u)]) rep.cosets_ok = false;
  }

  rep.factorization = make_factorization_report(
      w_min_poincare(W, ideal),
      product_of_geometrics(ideal_exponents(rs, ideal).exponents));
  return rep;
}

}  // namespace ideal_lab

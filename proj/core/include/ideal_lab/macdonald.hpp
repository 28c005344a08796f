#pragma once

#include "ideal_lab/ideals.hpp"
#include "ideal_lab/poly.hpp"
#include "ideal_lab/weyl.hpp"
#include "ideal_lab/weylcomb.hpp"

namespace ideal_lab {

// Both sides of the height-specialized product identity
//   sum_w prod_{alpha in R} (1 - t^{ht(w alpha)+1}) / (1 - t^{ht(w alpha)})
//     = sum_w t^{|N(w) cap R|}
// for an arbitrary subset R of the positive roots.

IntPolynomial macdonald_rhs(const WeylGroup& W, const IndexSet& r);

// Left side evaluated exactly at the integer points t0 = 2 .. |R|+2 and
// interpolated; EvaluationPoleError guards a vanishing denominator (which
// would need ht(w alpha) = 0 and cannot occur).
IntPolynomial macdonald_lhs(const RootSystem& rs, const WeylGroup& W, const IndexSet& r);

// Verification record for the highest-root ideal I = {theta}, following the
// route through the splitting of W at W_min rather than a single comparison.
struct HighestRootIdealReport {
  // complement roots pairing to height <theta, -> = 1 split into pairs summing to theta
  bool pairing_ok = false;
  // every w outside W_min inverts exactly one root of each pair
  bool nonmin_half_ok = false;
  // the product over those pairs telescopes to t^{#pairs} at every sample point
  bool nonmin_product_ok = false;
  // every non-identity w in W_min contributes a vanishing product term
  bool min_terms_vanish_ok = false;
  // the two sides of the product identity agree for R = I^c
  bool macky_ok = false;
  // w -> N(w) cap I^c is a bijection from W_min onto the Weyl-type subsets
  bool bijection_ok = false;
  // W_min is a union of left cosets of the stabilizer parabolic of theta
  bool cosets_ok = false;
  FactorizationReport factorization;

  bool all_ok() const {
    return pairing_ok && nonmin_half_ok && nonmin_product_ok && min_terms_vanish_ok && macky_ok &&
           bijection_ok && cosets_ok && factorization.equal;
  }
};

HighestRootIdealReport verify_uniform1(const RootSystem& rs, const WeylGroup& W);

}  // namespace ideal_lab

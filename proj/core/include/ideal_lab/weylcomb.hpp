#pragma once

#include "ideal_lab/ideals.hpp"
#include "ideal_lab/poly.hpp"
#include "ideal_lab/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ideal_lab {

// Subsets S of I^c with S and I^c - S both closed under root addition
// inside I^c.  Always realized as N(w) cap I^c for some w.
enum class WeylTypeMethod { image, direct };

// Deduplicated {N(w) cap I^c : w in W}; ordered by (size, bitset).
std::vector<IndexSet> weyl_type_sets_image(const WeylGroup& W, const Ideal& ideal);
// All S passing the two closure checks, found by height-ordered constraint
// propagation; requires |I^c| <= 24 (ComplementTooLargeError).
std::vector<IndexSet> weyl_type_sets_direct(const RootSystem& rs, const Ideal& ideal);
std::vector<IndexSet> weyl_type_sets(const RootSystem& rs, const WeylGroup& W, const Ideal& ideal,
                                     WeylTypeMethod method);

bool is_weyl_type(const RootSystem& rs, const Ideal& ideal, const IndexSet& s);

// Sum of t^|S| over the Weyl-type subsets of I^c.
IntPolynomial poincare_poly(const WeylGroup& W, const Ideal& ideal);

struct FactorizationReport {
  int ideal_id = -1;
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool equal = false;
  std::optional<int> first_mismatch_degree;
};

FactorizationReport make_factorization_report(const IntPolynomial& lhs, const IntPolynomial& rhs,
                                              int ideal_id = -1);
// { "ideal": ..., "lhs_coeffs": [...], "rhs_coeffs": [...], "equal": ...,
//   "first_mismatch_degree": int|null }
std::string factorization_report_json(const FactorizationReport& r);

// lhs = poincare_poly, rhs = product of geometric series over the ideal
// exponents; exact comparison, inequality is a verdict rather than an error.
FactorizationReport check_poincare_factorization(const RootSystem& rs, const WeylGroup& W,
                                                 const Ideal& ideal, int ideal_id = -1);

// Elements whose negative-simple preimages all lie in I^c; these are the
// unique minimal representatives of the Weyl-type subsets.
bool in_w_min(const WeylGroup& W, const Ideal& ideal, uint32_t e);
std::vector<uint32_t> w_min_elements(const WeylGroup& W, const Ideal& ideal);

// Sum over W_min of t^{|N(w) cap I^c|}; equals poincare_poly via the
// minimal-representative bijection (asserted in tests, not assumed here).
IntPolynomial w_min_poincare(const WeylGroup& W, const Ideal& ideal);

// The unique w in W_min with N(w) cap I^c = S.
// Throws NotWeylTypeError when S fails the closure checks.
uint32_t minimal_representative(const RootSystem& rs, const WeylGroup& W, const Ideal& ideal,
                                const IndexSet& s);

// Minimal-length representatives {x : N(x) disjoint from the parabolic
// positive roots}, one per left coset of the parabolic subgroup.
std::vector<uint32_t> coset_reps(const RootSystem& rs, const WeylGroup& W,
                                 const IndexSet& parabolic_simples);

}  // namespace ideal_lab

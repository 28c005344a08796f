#pragma once

#include "ideal_lab/ideals.hpp"
#include "ideal_lab/poly.hpp"
#include "ideal_lab/weylcomb.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ideal_lab {

// A central arrangement given by integer normal covectors on the coroot
// space.  Normals are pairwise non-proportional.
struct Arrangement {
  int ambient_dim = 0;
  std::vector<std::vector<long long>> normals;
  std::vector<int> labels;      // originating root index per hyperplane, -1 if none
  std::vector<int> order_hint;  // deletion preference, higher tried first
};

// One hyperplane per complement root; hint prefers the highest root of
// I^c meeting the first simple coordinate, then descending height.
Arrangement build_ideal_arrangement(const RootSystem& rs, const Ideal& ideal);

Arrangement deleted(const Arrangement& arr, int h);
// The arrangement induced on hyperplane h (an integer basis of h is chosen;
// merged hyperplanes are deduplicated).
Arrangement restrict_to(const Arrangement& arr, int h);

struct Flat {
  IndexSet hyperplanes;  // every hyperplane containing the flat
  int dim = 0;
  long long mobius = 0;
};

// All intersection subspaces ordered by decreasing dimension, starting at
// the whole space; mobius follows the usual recursion from the top.
struct IntersectionLattice {
  std::vector<Flat> flats;
};

struct ArrangementBudget {
  int max_lattice_hyperplanes = 40;
  int max_ff_dim = 6;
  uint64_t max_ff_points = uint64_t{1} << 31;  // total tuples over all sample primes
  uint64_t max_cert_nodes = 200'000;
  int scale = 1;  // multiplies every allowance
};

IntersectionLattice intersection_lattice(const Arrangement& arr,
                                         const ArrangementBudget& budget = {});

enum class CharPolyMethod { lattice, finite_field };

// Monic of degree ambient_dim; the two methods are independent and agree.
IntPolynomial char_poly(const Arrangement& arr, CharPolyMethod method,
                        const ArrangementBudget& budget = {});

// chi of the ideal arrangement versus t^{n-k} * prod_i (t - m_i) over the
// ideal exponents; inequality is a verdict, not an error.
FactorizationReport check_char_poly_factorization(const RootSystem& rs, const Ideal& ideal,
                                                  int ideal_id = -1,
                                                  const ArrangementBudget& budget = {});

// Certified exponent recursion: each internal node deletes one hyperplane,
// restricts to it, and combines the two certified exponent multisets.
struct FreenessCertificate {
  struct Node {
    IndexSet ambient;                   // hyperplanes containing the node's space
    std::vector<IndexSet> hyperplanes;  // canonical label set per hyperplane
    int dim = 0;
    std::vector<int> exponents;  // ascending; |exponents| = dim, sum = hyperplane count
    int pivot = -1;              // index into hyperplanes, -1 at leaves
    int deleted_child = -1;
    int restricted_child = -1;
  };
  std::vector<Node> nodes;  // nodes[0] is the root; children may be shared
  int depth = 0;

  const std::vector<int>& exponents() const { return nodes[0].exponents; }
};

// nullopt means no chain was found within budget, NOT that the arrangement
// is non-free.  Hard budget exhaustion throws BudgetExceededError instead.
std::optional<FreenessCertificate> freeness_certificate(const Arrangement& arr,
                                                        const ArrangementBudget& budget = {});

// Regions of the complement, computed by gluing Weyl chambers across walls
// that are not in I^c; coefficient of t^d counts regions separated from the
// region of the dominant chamber by d hyperplanes.
IntPolynomial chamber_poly(const RootSystem& rs, const WeylGroup& W, const Ideal& ideal);

struct ArrangementReport {
  FactorizationReport chi;     // lhs = chi, rhs = expected factorization
  std::string free_status;     // "found" | "not_found" | "budget" | "" when not run
  int certificate_depth = -1;  // -1 when no certificate
};

// { "chi_coeffs": [...], "expected_coeffs": [...], "thm2_equal": ...,
//   "free_certificate": ..., "certificate_depth": ... }
std::string arrangement_report_json(const ArrangementReport& r);

}  // namespace ideal_lab

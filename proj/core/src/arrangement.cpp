#include "ideal_lab/arrangement.hpp"

#include "ideal_lab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "json.hpp"

namespace ideal_lab {

namespace {

long long row_content(const std::vector<long long>& row) {
  long long g = 0;
  for (long long v : row) g = std::gcd(g, std::llabs(v));
  return g;
}

// integer row-echelon span with exact membership tests
class Echelon {
public:
  explicit Echelon(int cols) : cols_(cols) {}

  std::vector<long long> residue(std::vector<long long> row) const {
    for (const auto& b : rows_) {
      int lead = lead_of(b);
      if (row[lead] == 0) continue;
      long long g = std::gcd(std::llabs(b[lead]), std::llabs(row[lead]));
      long long mb = row[lead] / g, mr = b[lead] / g;
      for (int i = 0; i < cols_; ++i) row[i] = mr * row[i] - mb * b[i];
    }
    return row;
  }

  bool contains(const std::vector<long long>& row) const {
    auto r = residue(row);
    return std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; });
  }

  bool add(const std::vector<long long>& row) {
    auto r = residue(row);
    long long g = row_content(r);
    if (g == 0) return false;
    for (long long& v : r) v /= g;
    auto pos = std::find_if(rows_.begin(), rows_.end(),
                            [&](const auto& b) { return lead_of(b) > lead_of(r); });
    rows_.insert(pos, std::move(r));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

private:
  static int lead_of(const std::vector<long long>& r) {
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) return static_cast<int>(i);
    return static_cast<int>(r.size());
  }
  int cols_;
  std::vector<std::vector<long long>> rows_;
};

std::vector<long long> normalized_row(std::vector<long long> row) {
  long long g = row_content(row);
  if (g == 0) return row;
  for (long long& v : row) v /= g;
  for (long long v : row) {
    if (v == 0) continue;
    if (v < 0)
      for (long long& w : row) w = -w;
    break;
  }
  return row;
}

int effective(int v, int scale) { return v * std::max(1, scale); }
uint64_t effective(uint64_t v, int scale) { return v * static_cast<uint64_t>(std::max(1, scale)); }

}  // namespace

Arrangement build_ideal_arrangement(const RootSystem& rs, const Ideal& ideal) {
  Arrangement arr;
  arr.ambient_dim = rs.rank();
  ideal.complement.for_each([&](int a) {
    std::vector<long long> row(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) row[i] = rs.pairing(a, i);
    arr.normals.push_back(std::move(row));
    arr.labels.push_back(a);
    arr.order_hint.push_back(rs.height(a));
  });

  // prefer deleting the maximal complement root with support on the first
  // simple coordinate; this follows the deletion chain that stays inside
  // the family of ideal arrangements
  int best = -1;
  ideal.complement.for_each([&](int a) {
    if (rs.root(a).coords[0] > 0 && (best < 0 || a > best)) best = a;
  });
  if (best >= 0)
    for (size_t h = 0; h < arr.labels.size(); ++h)
      if (arr.labels[h] == best) arr.order_hint[h] += 1000;

  for (size_t a = 0; a < arr.normals.size(); ++a) {
    assert(row_content(arr.normals[a]) != 0);
    for (size_t b = a + 1; b < arr.normals.size(); ++b)
      assert(normalized_row(arr.normals[a]) != normalized_row(arr.normals[b]));
  }
  return arr;
}

Arrangement deleted(const Arrangement& arr, int h) {
  Arrangement out;
  out.ambient_dim = arr.ambient_dim;
  for (size_t i = 0; i < arr.normals.size(); ++i) {
    if (static_cast<int>(i) == h) continue;
    out.normals.push_back(arr.normals[i]);
    out.labels.push_back(arr.labels[i]);
    out.order_hint.push_back(arr.order_hint[i]);
  }
  return out;
}

Arrangement restrict_to(const Arrangement& arr, int h) {
  const int n = arr.ambient_dim;
  const auto& a = arr.normals[h];
  int pivot = 0;
  while (a[pivot] == 0) ++pivot;

  Arrangement out;
  out.ambient_dim = n - 1;
  std::map<std::vector<long long>, size_t> seen;
  for (size_t g = 0; g < arr.normals.size(); ++g) {
    if (static_cast<int>(g) == h) continue;
    // the induced functional on the integer kernel basis
    // v_i = a[pivot] e_i - a[i] e_pivot (i != pivot)
    std::vector<long long> row;
    row.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
      if (i == pivot) continue;
      row.push_back(a[pivot] * arr.normals[g][i] - a[i] * arr.normals[g][pivot]);
    }
    row = normalized_row(row);
    assert(row_content(row) != 0);
    auto [it, fresh] = seen.emplace(row, out.normals.size());
    if (fresh) {
      out.normals.push_back(row);
      out.labels.push_back(-1);
      out.order_hint.push_back(arr.order_hint[g]);
    } else {
      out.order_hint[it->second] = std::max(out.order_hint[it->second], arr.order_hint[g]);
    }
  }
  return out;
}

IntersectionLattice intersection_lattice(const Arrangement& arr, const ArrangementBudget& budget) {
  const int m = static_cast<int>(arr.normals.size());
  if (m > effective(budget.max_lattice_hyperplanes, budget.scale))
    throw BudgetExceededError("intersection lattice limited to " +
                              std::to_string(effective(budget.max_lattice_hyperplanes,
                                                       budget.scale)) +
                              " hyperplanes, got " + std::to_string(m));

  struct Work {
    IndexSet labels;
    Echelon basis;
  };

  IntersectionLattice lat;
  std::vector<Work> level{Work{IndexSet{}, Echelon(arr.ambient_dim)}};
  lat.flats.push_back(Flat{IndexSet{}, arr.ambient_dim, 0});
  int dim = arr.ambient_dim;

  while (!level.empty() && dim > 0) {
    --dim;
    std::map<IndexSet, Echelon> next;  // ordered: deterministic flat order
    for (const Work& w : level) {
      for (int h = 0; h < m; ++h) {
        if (w.labels.test(h)) continue;
        Echelon e = w.basis;
        bool grew = e.add(arr.normals[h]);
        assert(grew);
        (void)grew;
        IndexSet closed;
        for (int g = 0; g < m; ++g)
          if (w.labels.test(g) || g == h || e.contains(arr.normals[g])) closed.set(g);
        next.emplace(closed, std::move(e));
      }
    }
    level.clear();
    for (auto& [labels, basis] : next) {
      lat.flats.push_back(Flat{labels, dim, 0});
      level.push_back(Work{labels, std::move(basis)});
    }
  }

  lat.flats[0].mobius = 1;
  for (size_t i = 1; i < lat.flats.size(); ++i) {
    long long sum = 0;
    for (size_t j = 0; j < i; ++j)
      if (lat.flats[j].hyperplanes.is_subset_of(lat.flats[i].hyperplanes)) sum += lat.flats[j].mobius;
    lat.flats[i].mobius = -sum;
  }
  return lat;
}

namespace {

std::vector<long long> primes_above(long long bound, int count) {
  std::vector<long long> out;
  for (long long q = std::max(bound + 1, 2ll); static_cast<int>(out.size()) < count; ++q) {
    bool prime = q >= 2;
    for (long long d = 2; d * d <= q && prime; ++d)
      if (q % d == 0) prime = false;
    if (prime) out.push_back(q);
  }
  return out;
}

long long mod_pow(long long b, long long e, long long q) {
  long long r = 1 % q;
  b %= q;
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

// #{v in F_q^n : <a, v> != 0 for every normal a}, by eliminating the first
// coordinate: each assignment of the others forbids at most one value per
// hyperplane with nonzero leading coefficient.
long long count_complement_points(const Arrangement& arr, long long q) {
  const int n = arr.ambient_dim;
  const int m = static_cast<int>(arr.normals.size());
  std::vector<std::vector<long long>> rows(m, std::vector<long long>(n));
  for (int h = 0; h < m; ++h)
    for (int c = 0; c < n; ++c) rows[h][c] = ((arr.normals[h][c] % q) + q) % q;

  std::vector<int> lead_zero, lead_nonzero;
  std::vector<long long> lead_inv(m, 0);
  for (int h = 0; h < m; ++h) {
    if (rows[h][0] == 0)
      lead_zero.push_back(h);
    else {
      lead_nonzero.push_back(h);
      lead_inv[h] = mod_pow(rows[h][0], q - 2, q);
    }
  }

  std::vector<std::vector<long long>> dots(n + 1, std::vector<long long>(m, 0));
  std::vector<int> stamp(q, -1);
  int tick = 0;
  long long total = 0;

  auto leaf = [&](const std::vector<long long>& d) {
    for (int h : lead_zero)
      if (d[h] == 0) return;
    ++tick;
    long long banned = 0;
    for (int h : lead_nonzero) {
      long long x = (q - d[h]) % q * lead_inv[h] % q;
      if (stamp[x] != tick) {
        stamp[x] = tick;
        ++banned;
      }
    }
    total += q - banned;
  };

  auto rec = [&](auto&& self, int c) -> void {
    if (c == n) {
      leaf(dots[c]);
      return;
    }
    dots[c + 1] = dots[c];
    for (long long v = 0; v < q; ++v) {
      if (v > 0)
        for (int h = 0; h < m; ++h) {
          dots[c + 1][h] += rows[h][c];
          if (dots[c + 1][h] >= q) dots[c + 1][h] -= q;
        }
      self(self, c + 1);
    }
  };
  rec(rec, 1);
  return total;
}

}  // namespace

IntPolynomial char_poly(const Arrangement& arr, CharPolyMethod method,
                        const ArrangementBudget& budget) {
  const int n = arr.ambient_dim;
  if (method == CharPolyMethod::lattice) {
    IntersectionLattice lat = intersection_lattice(arr, budget);
    std::vector<BigInt> coeffs(n + 1, 0);
    for (const Flat& f : lat.flats) coeffs[f.dim] += f.mobius;
    return IntPolynomial(std::move(coeffs));
  }

  if (n > effective(budget.max_ff_dim, budget.scale))
    throw BudgetExceededError("point counting limited to dimension " +
                              std::to_string(effective(budget.max_ff_dim, budget.scale)));
  long long maxcoord = 1;
  for (const auto& row : arr.normals)
    for (long long v : row) maxcoord = std::max(maxcoord, std::llabs(v));
  const long long bound = static_cast<long long>(n) * n * maxcoord;
  std::vector<long long> primes = primes_above(bound, n + 1);

  uint64_t tuples = 0;
  for (long long q : primes) {
    uint64_t t = 1;
    for (int i = 0; i < n - 1; ++i) t *= static_cast<uint64_t>(q);
    tuples += t;
  }
  if (tuples > effective(budget.max_ff_points, budget.scale))
    throw BudgetExceededError("point counting would visit " + std::to_string(tuples) +
                              " tuples, above the budget");

  std::vector<std::pair<BigInt, BigRational>> points;
  for (long long q : primes)
    points.push_back({BigInt(q), BigRational(count_complement_points(arr, q))});
  return interpolate(points);
}

FactorizationReport check_char_poly_factorization(const RootSystem& rs, const Ideal& ideal,
                                                  int ideal_id, const ArrangementBudget& budget) {
  ExponentProfile p = ideal_exponents(rs, ideal);
  IntPolynomial expected = IntPolynomial::monomial(1, rs.rank() - p.k);
  for (int m : p.exponents) expected = expected * IntPolynomial{-m, 1};
  IntPolynomial chi = char_poly(build_ideal_arrangement(rs, ideal), CharPolyMethod::lattice, budget);
  return make_factorization_report(chi, expected, ideal_id);
}

namespace {

struct CertKey {
  IndexSet ambient;
  std::vector<IndexSet> hyps;
  bool operator==(const CertKey& o) const { return ambient == o.ambient && hyps == o.hyps; }
};

struct CertKeyHash {
  size_t operator()(const CertKey& k) const {
    uint64_t h = k.ambient.hash();
    for (const IndexSet& s : k.hyps) h = h * 0x100000001b3ull ^ s.hash();
    return h;
  }
};

struct CertSearch {
  const Arrangement& arr;
  uint64_t node_budget;
  uint64_t visited = 0;
  std::vector<FreenessCertificate::Node> pool;
  std::vector<int> pool_depth;
  std::unordered_map<CertKey, int, CertKeyHash> memo;  // -1 records failure
  std::unordered_map<IndexSet, std::pair<IndexSet, int>, IndexSetHash> closures;

  // closed label set and dimension of the span of the given labels
  std::pair<IndexSet, int> closure(const IndexSet& labels) {
    auto it = closures.find(labels);
    if (it != closures.end()) return it->second;
    Echelon e(arr.ambient_dim);
    labels.for_each([&](int h) { e.add(arr.normals[h]); });
    IndexSet closed;
    for (int g = 0; g < static_cast<int>(arr.normals.size()); ++g)
      if (labels.test(g) || e.contains(arr.normals[g])) closed.set(g);
    auto result = std::make_pair(closed, arr.ambient_dim - e.rank());
    closures.emplace(labels, result);
    return result;
  }

  int hint_of(const IndexSet& hyp) const {
    int best = 0;
    hyp.for_each([&](int h) { best = std::max(best, arr.order_hint[h]); });
    return best;
  }

  int search(const IndexSet& ambient, std::vector<IndexSet> hyps, int dim) {
    std::sort(hyps.begin(), hyps.end());
    hyps.erase(std::unique(hyps.begin(), hyps.end()), hyps.end());
    CertKey key{ambient, hyps};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++visited > node_budget)
      throw BudgetExceededError("exponent-certificate search exceeded its node budget");

    if (hyps.empty()) {
      FreenessCertificate::Node node;
      node.ambient = ambient;
      node.dim = dim;
      node.exponents.assign(dim, 0);
      pool.push_back(std::move(node));
      pool_depth.push_back(0);
      int id = static_cast<int>(pool.size()) - 1;
      memo.emplace(key, id);
      return id;
    }

    std::vector<int> order(hyps.size());
    for (size_t i = 0; i < hyps.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int ha = hint_of(hyps[a]), hb = hint_of(hyps[b]);
      if (ha != hb) return ha > hb;
      return hyps[a] < hyps[b];
    });

    for (int pivot : order) {
      std::vector<IndexSet> del;
      for (size_t i = 0; i < hyps.size(); ++i)
        if (static_cast<int>(i) != pivot) del.push_back(hyps[i]);
      int del_id = search(ambient, del, dim);
      if (del_id < 0) continue;

      std::vector<IndexSet> res;
      for (const IndexSet& h : del) {
        auto [labels, d] = closure(h | hyps[pivot]);
        assert(d == dim - 2);
        res.push_back(labels);
      }
      int res_id = search(hyps[pivot], res, dim - 1);
      if (res_id < 0) continue;

      // the restriction exponents must sit inside the deletion exponents
      // with a single remainder r; then this node has them plus r+1
      std::vector<int> a = pool[del_id].exponents;   // size dim
      const std::vector<int>& b = pool[res_id].exponents;  // size dim-1
      bool ok = true;
      for (int v : b) {
        auto it = std::find(a.begin(), a.end(), v);
        if (it == a.end()) {
          ok = false;
          break;
        }
        a.erase(it);
      }
      if (!ok || a.size() != 1) continue;

      FreenessCertificate::Node node;
      node.ambient = ambient;
      node.hyperplanes = hyps;
      node.dim = dim;
      node.exponents = b;
      node.exponents.push_back(a[0] + 1);
      std::sort(node.exponents.begin(), node.exponents.end());
      node.pivot = pivot;
      node.deleted_child = del_id;
      node.restricted_child = res_id;
      assert(std::accumulate(node.exponents.begin(), node.exponents.end(), size_t{0}) ==
             hyps.size());
      pool.push_back(std::move(node));
      pool_depth.push_back(1 + std::max(pool_depth[del_id], pool_depth[res_id]));
      int id = static_cast<int>(pool.size()) - 1;
      memo.emplace(key, id);
      return id;
    }

    memo.emplace(key, -1);
    return -1;
  }
};

}  // namespace

std::optional<FreenessCertificate> freeness_certificate(const Arrangement& arr,
                                                        const ArrangementBudget& budget) {
  CertSearch s{arr, effective(budget.max_cert_nodes, budget.scale)};
  std::vector<IndexSet> hyps;
  for (size_t h = 0; h < arr.normals.size(); ++h) hyps.push_back(IndexSet::single(static_cast<int>(h)));
  int root = s.search(IndexSet{}, std::move(hyps), arr.ambient_dim);
  if (root < 0) return std::nullopt;

  // the roots of chi must be exactly the certified exponents
  IntPolynomial expected{1};
  for (int e : s.pool[root].exponents) expected = expected * IntPolynomial{-e, 1};
  if (expected != char_poly(arr, CharPolyMethod::lattice, budget))
    throw Error("internal: certified exponents disagree with the characteristic polynomial");

  // reorder the pool so the root comes first
  FreenessCertificate cert;
  cert.depth = s.pool_depth[root];
  std::vector<int> remap(s.pool.size(), -1);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (remap[id] >= 0) continue;
    remap[id] = static_cast<int>(cert.nodes.size());
    cert.nodes.push_back(s.pool[id]);
    if (s.pool[id].deleted_child >= 0) stack.push_back(s.pool[id].deleted_child);
    if (s.pool[id].restricted_child >= 0) stack.push_back(s.pool[id].restricted_child);
  }
  for (auto& node : cert.nodes) {
    if (node.deleted_child >= 0) node.deleted_child = remap[node.deleted_child];
    if (node.restricted_child >= 0) node.restricted_child = remap[node.restricted_child];
  }
  return cert;
}

IntPolynomial chamber_poly(const RootSystem& rs, const WeylGroup& W, const Ideal& ideal) {
  const uint32_t size = W.size();
  std::vector<uint32_t> parent(size);
  for (uint32_t e = 0; e < size; ++e) parent[e] = e;
  auto find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  // glue chambers across walls outside I^c; wall between w and w s_i is the
  // hyperplane of |w(alpha_i)|
  auto wall = [&](uint32_t e, int s) { return W.image_root(e, s); };
  for (uint32_t e = 0; e < size; ++e)
    for (int s = 0; s < rs.rank(); ++s)
      if (!ideal.complement.test(wall(e, s))) {
        uint32_t a = find(e), b = find(W.right_mult(e, s));
        if (a != b) parent[a] = b;
      }

  // 0-1 shortest path from the dominant chamber, cost 1 on I^c walls
  std::vector<int> dist(size, -1);
  std::deque<uint32_t> dq;
  dist[W.identity()] = 0;
  dq.push_back(W.identity());
  while (!dq.empty()) {
    uint32_t e = dq.front();
    dq.pop_front();
    for (int s = 0; s < rs.rank(); ++s) {
      uint32_t to = W.right_mult(e, s);
      int cost = ideal.complement.test(wall(e, s)) ? 1 : 0;
      if (dist[to] == -1 || dist[e] + cost < dist[to]) {
        dist[to] = dist[e] + cost;
        if (cost == 0)
          dq.push_front(to);
        else
          dq.push_back(to);
      }
    }
  }

  std::vector<int> region_dist(size, -1);
  for (uint32_t e = 0; e < size; ++e) {
    uint32_t r = find(e);
    if (region_dist[r] == -1 || dist[e] < region_dist[r]) region_dist[r] = dist[e];
  }
  std::vector<BigInt> coeffs(ideal.complement.count() + 1, 0);
  for (uint32_t e = 0; e < size; ++e)
    if (find(e) == e) coeffs[region_dist[e]] += 1;
  return IntPolynomial(std::move(coeffs));
}

std::string arrangement_report_json(const ArrangementReport& r) {
  nlohmann::ordered_json j;
  auto coeffs = [](const IntPolynomial& p) {
    std::vector<long long> out;
    for (const BigInt& c : p.coeffs()) out.push_back(c.convert_to<long long>());
    return out;
  };
  j["chi_coeffs"] = coeffs(r.chi.lhs);
  j["expected_coeffs"] = coeffs(r.chi.rhs);
  j["thm2_equal"] = r.chi.equal;
  j["free_certificate"] = r.free_status;
  j["certificate_depth"] = r.certificate_depth;
  return j.dump();
}

}  // namespace ideal_lab

#include "ideal_lab/rootsys.hpp"

#include "ideal_lab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>

namespace ideal_lab {

namespace {

// scaled integer inner products (alpha_i, alpha_j); the scale cancels in
// every Cartan pairing 2(x, y)/(y, y)
std::vector<std::vector<int>> gram_matrix(TypeLetter letter, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto chain = [&](int upto) {
    for (int i = 0; i < upto; ++i) g[i][i + 1] = g[i + 1][i] = -1;
  };
  switch (letter) {
    case TypeLetter::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      chain(n - 1);
      break;
    case TypeLetter::B:  // alpha_n short
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 1;
      chain(n - 1);
      break;
    case TypeLetter::C:  // alpha_n long
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      chain(n - 2);
      g[n - 2][n - 1] = g[n - 1][n - 2] = -2;
      break;
    case TypeLetter::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      chain(n - 2);
      g[n - 3][n - 1] = g[n - 1][n - 3] = -1;
      break;
    case TypeLetter::E: {
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      auto edge = [&](int a, int b) { g[a - 1][b - 1] = g[b - 1][a - 1] = -1; };
      edge(1, 3);
      edge(3, 4);
      edge(2, 4);
      edge(4, 5);
      edge(5, 6);
      if (n >= 7) edge(6, 7);
      if (n >= 8) edge(7, 8);
      break;
    }
    case TypeLetter::F:  // alpha_1, alpha_2 long; scaled by 2
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      g[0][1] = g[1][0] = -2;
      g[1][2] = g[2][1] = -2;
      g[2][3] = g[3][2] = -1;
      break;
    case TypeLetter::G:  // alpha_1 short
      g[0][0] = 2;
      g[1][1] = 6;
      g[0][1] = g[1][0] = -3;
      break;
  }
  return g;
}

int expected_root_count(TypeLetter letter, int n) {
  switch (letter) {
    case TypeLetter::A: return n * (n + 1) / 2;
    case TypeLetter::B:
    case TypeLetter::C: return n * n;
    case TypeLetter::D: return n * (n - 1);
    case TypeLetter::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case TypeLetter::F: return 24;
    case TypeLetter::G: return 6;
  }
  return 0;
}

void validate_type(TypeLetter letter, int n) {
  auto bad = [&](const std::string& why) {
    throw UnsupportedTypeError("unsupported type " + std::string(1, static_cast<char>(letter)) +
                               std::to_string(n) + ": " + why);
  };
  switch (letter) {
    case TypeLetter::A:
      if (n < 1) bad("A requires rank >= 1");
      break;
    case TypeLetter::B:
      if (n < 2) bad("B requires rank >= 2");
      break;
    case TypeLetter::C:
      if (n < 2) bad("C requires rank >= 2");
      break;
    case TypeLetter::D:
      if (n < 4) bad("D requires rank >= 4 (D3 would alias A3, D2 would alias A1xA1)");
      break;
    case TypeLetter::E:
      if (n < 6 || n > 8) bad("E exists for rank 6, 7, 8 only");
      break;
    case TypeLetter::F:
      if (n != 4) bad("F exists for rank 4 only");
      break;
    case TypeLetter::G:
      if (n != 2) bad("G exists for rank 2 only");
      break;
  }
  if (expected_root_count(letter, n) > IndexSet::capacity)
    bad("positive-root count exceeds this build's bitset capacity (" +
        std::to_string(IndexSet::capacity) + ")");
}

}  // namespace

TypeRank parse_type_rank(const std::string& s) {
  if (s.size() < 2) throw UnsupportedTypeError("cannot parse type '" + s + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G')
    throw UnsupportedTypeError("cannot parse type '" + s + "': letter must be A..G");
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw UnsupportedTypeError("cannot parse type '" + s + "': rank must be numeric");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw UnsupportedTypeError("cannot parse type '" + s + "': rank too large");
  }
  return TypeRank{static_cast<TypeLetter>(c), rank};
}

RootSystem RootSystem::build(TypeLetter letter, int rank) {
  validate_type(letter, rank);

  std::string alias;
  if (letter == TypeLetter::C && rank == 2) {
    alias = "C2 requested; constructed as the isomorphic B2";
    letter = TypeLetter::B;
  }

  RootSystem rs;
  rs.type_ = TypeRank{letter, rank};
  rs.alias_note_ = alias;
  rs.rank_ = rank;
  rs.gram_ = gram_matrix(letter, rank);

  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      int num = 2 * rs.gram_[i][j];
      assert(num % rs.gram_[j][j] == 0);
      rs.cartan_[i][j] = num / rs.gram_[j][j];
    }

  // grow the positive system by height with the root-string condition:
  // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0 where p is the
  // depth of the alpha_i-string below beta
  std::map<std::vector<int>, int> seen;  // coords -> provisional id
  std::vector<std::vector<int>> coords_list;
  auto add_root = [&](const std::vector<int>& c) {
    if (seen.emplace(c, static_cast<int>(coords_list.size())).second)
      coords_list.push_back(c);
  };
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    add_root(c);
  }
  std::vector<std::vector<int>> frontier = coords_list;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank; ++i) {
        int pair = 0;
        for (int j = 0; j < rank; ++j) pair += beta[j] * rs.cartan_[j][i];
        int p = 0;
        std::vector<int> below = beta;
        while (true) {
          below[i] -= 1;
          bool nonneg = std::all_of(below.begin(), below.end(), [](int v) { return v >= 0; });
          if (!nonneg || !seen.count(below)) break;
          ++p;
        }
        if (p - pair > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!seen.count(up)) {
            add_root(up);
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  if (static_cast<int>(coords_list.size()) != expected_root_count(letter, rank))
    throw Error("internal: root closure produced " + std::to_string(coords_list.size()) +
                " roots for " + rs.type_.name());

  // deterministic order: height ascending, then coords lexicographically
  // descending (puts alpha_i at index i)
  std::sort(coords_list.begin(), coords_list.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  const int nroots = static_cast<int>(coords_list.size());
  rs.roots_.resize(nroots);
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < nroots; ++i) {
    rs.roots_[i].coords = coords_list[i];
    rs.roots_[i].height = std::accumulate(coords_list[i].begin(), coords_list[i].end(), 0);
    rs.roots_[i].index = i;
    index_of[coords_list[i]] = i;
  }
  for (int i = 0; i < rank; ++i) {
    assert(rs.roots_[i].height == 1 && rs.roots_[i].coords[i] == 1);
  }

  rs.sum_table_.assign(static_cast<size_t>(nroots) * nroots, -1);
  for (int i = 0; i < nroots; ++i)
    for (int j = 0; j < nroots; ++j) {
      std::vector<int> s(rank);
      for (int k = 0; k < rank; ++k) s[k] = rs.roots_[i].coords[k] + rs.roots_[j].coords[k];
      auto it = index_of.find(s);
      if (it != index_of.end()) rs.sum_table_[static_cast<size_t>(i) * nroots + j] = it->second;
    }

  rs.pairing_.assign(static_cast<size_t>(nroots) * nroots, 0);
  for (int i = 0; i < nroots; ++i)
    for (int j = 0; j < nroots; ++j) {
      long long ip = 0, jj = 0;
      for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b) {
          ip += static_cast<long long>(rs.roots_[i].coords[a]) * rs.gram_[a][b] * rs.roots_[j].coords[b];
          jj += static_cast<long long>(rs.roots_[j].coords[a]) * rs.gram_[a][b] * rs.roots_[j].coords[b];
        }
      long long num = 2 * ip;
      assert(jj != 0 && num % jj == 0);
      rs.pairing_[static_cast<size_t>(i) * nroots + j] = static_cast<int>(num / jj);
    }

  // partial order: alpha <= beta iff beta - alpha has nonnegative coords
  rs.above_.assign(nroots, IndexSet{});
  for (int i = 0; i < nroots; ++i)
    for (int j = 0; j < nroots; ++j) {
      bool le = true;
      for (int k = 0; k < rank && le; ++k)
        le = rs.roots_[i].coords[k] <= rs.roots_[j].coords[k];
      if (le) rs.above_[i].set(j);
    }

  int maximal = -1;
  for (int i = 0; i < nroots; ++i) {
    if (rs.above_[i].count() == 1) {
      if (maximal != -1) throw Error("internal: multiple maximal roots in " + rs.type_.name());
      maximal = i;
    }
  }
  if (maximal == -1) throw Error("internal: no maximal root in " + rs.type_.name());
  rs.highest_root_ = maximal;

  rs.sref_.assign(rank, std::vector<int>(nroots, -1));
  for (int s = 0; s < rank; ++s)
    for (int j = 0; j < nroots; ++j) {
      if (j == s) {
        rs.sref_[s][j] = s;  // image is -alpha_s
        continue;
      }
      std::vector<int> c = rs.roots_[j].coords;
      c[s] -= rs.pairing(j, s);
      auto it = index_of.find(c);
      assert(it != index_of.end());
      rs.sref_[s][j] = it->second;
    }

  return rs;
}

int RootSystem::find_root(const std::vector<int>& coords) const {
  for (const Root& r : roots_)
    if (r.coords == coords) return r.index;
  return -1;
}

IndexSet RootSystem::upper_closure(const IndexSet& s) const {
  IndexSet out;
  s.for_each([&](int i) { out |= above_[i]; });
  return out;
}

bool RootSystem::is_upper_closed(const IndexSet& s) const {
  return upper_closure(s) == s;
}

IndexSet RootSystem::parabolic_positive(const IndexSet& simples) const {
  IndexSet out;
  for (int i = 0; i < num_positive_roots(); ++i) {
    bool ok = true;
    for (int k = 0; k < rank_ && ok; ++k)
      if (roots_[i].coords[k] != 0 && !simples.test(k)) ok = false;
    if (ok) out.set(i);
  }
  return out;
}

uint64_t RootSystem::weyl_order() const {
  auto fact = [](int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
  };
  const int n = rank_;
  switch (type_.letter) {
    case TypeLetter::A: return fact(n + 1);
    case TypeLetter::B:
    case TypeLetter::C: return (uint64_t{1} << n) * fact(n);
    case TypeLetter::D: return (uint64_t{1} << (n - 1)) * fact(n);
    case TypeLetter::E: return n == 6 ? 51840ull : (n == 7 ? 2903040ull : 696729600ull);
    case TypeLetter::F: return 1152;
    case TypeLetter::G: return 12;
  }
  return 0;
}

}  // namespace ideal_lab

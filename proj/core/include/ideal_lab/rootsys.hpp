#pragma once

#include "ideal_lab/index_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ideal_lab {

enum class TypeLetter : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeRank {
  TypeLetter letter;
  int rank;
  std::string name() const { return std::string(1, static_cast<char>(letter)) + std::to_string(rank); }
  bool operator==(const TypeRank&) const = default;
};

// parse "B3", "e6", ... ; throws UnsupportedTypeError on garbage
TypeRank parse_type_rank(const std::string& s);

// A positive root in the simple-root basis.
struct Root {
  std::vector<int> coords;  // coefficients over the simple roots
  int height = 0;           // sum of coords
  int index = -1;           // position in the parent system's root order
};

// Positive roots of a simple system with their addition table, partial
// order, pairings and simple-reflection actions.  Immutable once built.
class RootSystem {
public:
  // Throws UnsupportedTypeError for invalid (letter, rank) pairs.
  // C2 is constructed as the isomorphic B2 (alias_note records this).
  static RootSystem build(TypeLetter letter, int rank);
  static RootSystem build(const TypeRank& tr) { return build(tr.letter, tr.rank); }

  const TypeRank& type() const { return type_; }
  const std::string& alias_note() const { return alias_note_; }
  int rank() const { return rank_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }

  const Root& root(int i) const { return roots_[i]; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  int height(int i) const { return roots_[i].height; }
  int max_height() const { return roots_.back().height; }

  // cartan(i, j) = <alpha_i, alpha_j^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  // pairing(i, j) = <root_i, root_j^vee>
  int pairing(int i, int j) const { return pairing_[i * roots_.size() + j]; }

  int highest_root() const { return highest_root_; }

  // index of root_i + root_j, or -1 when the sum is not a root
  int sum(int i, int j) const { return sum_table_[i * roots_.size() + j]; }

  // root_i <= root_j in the standard partial order
  bool leq(int i, int j) const { return above_[i].test(j); }
  // all j with root_i <= root_j (includes i)
  const IndexSet& above(int i) const { return above_[i]; }

  // index of a positive root given its coords, or -1
  int find_root(const std::vector<int>& coords) const;

  // s_s(root_j): returns the index of the (positive) image; the image is
  // negative exactly when j == s
  int simple_reflection(int s, int j) const { return sref_[s][j]; }

  // smallest upper-closed superset
  IndexSet upper_closure(const IndexSet& s) const;
  bool is_upper_closed(const IndexSet& s) const;

  IndexSet all_roots_mask() const { return IndexSet::first_n(num_positive_roots()); }
  // positive roots supported on the given simple-root subset
  IndexSet parabolic_positive(const IndexSet& simples) const;

  // |W| by the classification formula
  uint64_t weyl_order() const;

private:
  RootSystem() = default;
  TypeRank type_{TypeLetter::A, 1};
  std::string alias_note_;
  int rank_ = 0;
  std::vector<Root> roots_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> gram_;  // scaled (alpha_i, alpha_j)
  int highest_root_ = -1;
  std::vector<int32_t> sum_table_;
  std::vector<int> pairing_;
  std::vector<IndexSet> above_;
  std::vector<std::vector<int>> sref_;
};

}  // namespace ideal_lab

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace latfact {

// An interval [bottom, top] of a poset/lattice, given by element indices.
struct Interval {
  int bottom = -1;
  int top = -1;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct LatticeCheck {
  bool ok = true;
  bool join_side = true;        // failing operation: join (true) or meet
  int x = -1, y = -1;           // first failing pair in index order
  std::vector<int> candidates;  // its minimal upper (maximal lower) bounds
};

struct CrownWitness {
  std::vector<int> lower;  // x_1..x_k
  std::vector<int> upper;  // y_1..y_k; x_i <= y_i and x_i <= y_{i+1 mod k}
};

// A finite partially ordered set with an explicit order matrix.
class Poset {
 public:
  Poset() = default;

  // Builds the reflexive-transitive closure of a cover list (lower, upper).
  static Poset from_covers(std::size_t n, const std::vector<std::pair<int, int>>& covers,
                           std::vector<std::string> names = {});
  // Validates that `leq` (up-set rows) is reflexive, antisymmetric, transitive.
  static Poset from_leq(std::vector<Bitset> leq, std::vector<std::string> names = {});

  std::size_t size() const { return up_.size(); }
  bool leq(int a, int b) const { return up_[a].test(b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  const Bitset& up_set(int a) const { return up_[a]; }
  const Bitset& down_set(int a) const { return down_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  // Transitive reduction as (lower, upper) pairs, lexicographic order.
  std::vector<std::pair<int, int>> cover_pairs() const;
  std::vector<std::vector<int>> upper_covers() const;
  std::vector<std::vector<int>> lower_covers() const;

  std::optional<int> join(int a, int b) const;  // least upper bound
  std::optional<int> meet(int a, int b) const;  // greatest lower bound
  std::optional<int> top() const;
  std::optional<int> bottom() const;
  int height(int a) const;  // longest chain below a

  Bitset interval_members(Interval iv) const;  // throws if bottom ≰ top
  std::vector<int> maximal_of(const Bitset& set) const;
  std::vector<int> minimal_of(const Bitset& set) const;

  LatticeCheck lattice_check() const;
  bool is_lattice() const { return lattice_check().ok; }

 private:
  std::vector<Bitset> up_;    // up_[a] = { b : a <= b }
  std::vector<Bitset> down_;  // transpose
  std::vector<std::string> names_;

  void finish(std::vector<std::string> names);
};

// Order isomorphism test; backtracking with signature refinement.
bool lattices_isomorphic(const Poset& a, const Poset& b);

// Smallest crown of the given order as a suborder, or nullopt. The witness
// is the first one found in lexicographic element order.
std::optional<CrownWitness> find_crown(const Poset& p, int k);

// Does any crown of order k, 3 <= k <= size/2, exist?
bool has_any_crown(const Poset& p);

}  // namespace latfact

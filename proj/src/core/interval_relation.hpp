#pragma once

#include <optional>
#include <vector>

#include "poset.hpp"

namespace latfact {

// The four regions of an ordered set relative to an interval S: the members
// of S, the elements strictly above some member, strictly below some member,
// and the elements incomparable to all of S. Always a partition.
struct RegionPartition {
  Bitset members, above, below, incomparable;
};

RegionPartition region_partition(const Poset& order, Interval iv);

// An equivalence relation whose non-singleton classes are prescribed
// pairwise disjoint intervals; every other element is its own class.
// Classes are indexed with the given intervals first (in the given order),
// then singletons in ascending element order.
class IntervalRelation {
 public:
  static IntervalRelation make(const Poset& order, const std::vector<Interval>& intervals);

  const Poset& order() const { return order_; }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<Interval>& generators() const { return generators_; }
  const Bitset& class_members(int c) const { return classes_[c]; }
  int class_of(int element) const { return class_of_[element]; }
  int class_inf(int c) const { return inf_[c]; }
  int class_sup(int c) const { return sup_[c]; }
  bool fat(int c) const { return classes_[c].count() > 1; }

 private:
  Poset order_;
  std::vector<Interval> generators_;
  std::vector<Bitset> classes_;
  std::vector<int> class_of_;
  std::vector<int> inf_, sup_;
};

enum class FactorKind { preorder, partial_order, lattice };

// The factor set L/θ with the relation <=θ, the reflexive-transitive
// closure of "class-inf below class-sup".
struct FactorStructure {
  std::vector<Bitset> classes;
  std::vector<int> class_of;          // implosion map, element -> class
  std::vector<Bitset> relation;       // <=θ over class indices (row = up-set)
  FactorKind kind = FactorKind::preorder;
  std::vector<int> cycle;             // antisymmetry violation, class cycle
  LatticeCheck lattice_failure;       // meaningful when kind == partial_order

  bool leq(int a, int b) const { return relation[a].test(b); }
  // The factor as a poset; requires kind != preorder.
  Poset as_poset() const;
};

FactorStructure leq_theta(const IntervalRelation& rel);

// Full pipeline: classes, <=θ, certified kind.
FactorStructure factorize(const IntervalRelation& rel);

struct PenroseWitness {
  std::vector<int> interval_ids;  // indices into rel.generators(), cyclic
};

// θ is order-preserving iff the digraph "inf of S_i lies strictly below
// S_j" on the multi-element intervals is acyclic; a cycle is a Penrose
// crown witness.
struct OrderPreservation {
  bool preserved = true;
  std::optional<PenroseWitness> witness;
};

OrderPreservation is_order_preserving(const IntervalRelation& rel);

// Checks the literal cyclic condition on the interval list in the given
// order: inf of each interval lies strictly below the next, wrapping around.
bool is_penrose_crown(const Poset& order, const std::vector<Interval>& intervals);

// Nested-interval witness: x,y incomparable to S, a above, v below, with
// y = x∨v, x = y∧a, y ≰ a, v ≰ x.
struct NestedWitness {
  int x = -1, y = -1, a = -1, v = -1;
};

struct Classification {
  bool pure = true;
  std::optional<NestedWitness> witness;
};

// Classifies a lattice interval as pure or nested, cross-checking the
// quadruple characterization against the crown-through-endpoints one.
Classification classify_interval(const Poset& lattice, Interval iv);

// Lemma condition check for an arbitrary equivalence relation given by its
// classes: related pairs keep joins/meets related, and no order crossing
// between distinct classes. Agrees with "all classes are disjoint intervals".
bool check_interval_relation_axioms(const Poset& lattice, const std::vector<Bitset>& classes);

struct PreservationEntry {
  int p = -1, q = -1;       // element pair
  bool join = false;        // operation
  int result = -1;          // p∨q or p∧q in the original lattice
  bool preserved = false;   // class(result) == class(p) op class(q)
};

// Reports, for every element pair of a 1-generated pure interval relation,
// whether meet and join survive the factorization.
std::vector<PreservationEntry> meet_join_preservation_report(const Poset& lattice, Interval iv);

}  // namespace latfact

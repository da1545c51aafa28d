#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "context.hpp"
#include "poset.hpp"

namespace latfact {

struct Concept {
  Bitset extent;  // over objects
  Bitset intent;  // over attributes
};

// The concept lattice of a formal context. Concepts are enumerated in
// lectic order of their intents, so index 0 is the top concept and the
// last index is the bottom; the index order is a linear extension.
class ConceptLattice {
 public:
  static ConceptLattice build(const FormalContext& ctx);

  const FormalContext& context() const { return context_; }
  std::size_t size() const { return concepts_.size(); }
  const Concept& at(std::size_t i) const { return concepts_[i]; }
  const std::vector<Concept>& concepts() const { return concepts_; }
  const Poset& order() const { return order_; }
  int top() const { return 0; }
  int bottom() const { return static_cast<int>(size()) - 1; }

  bool leq(int a, int b) const { return order_.leq(a, b); }
  int join(int a, int b) const;
  int meet(int a, int b) const;

  std::optional<int> find_by_extent(const Bitset& extent) const;
  std::optional<int> find_by_intent(const Bitset& intent) const;
  int object_concept(std::size_t g) const;     // (g'', g')
  int attribute_concept(std::size_t m) const;  // (m', m'')

  // Join-irreducible and meet-irreducible concept indices (unique lower /
  // upper cover), in index order.
  std::pair<std::vector<int>, std::vector<int>> irreducibles() const;

  Bitset interval_members(Interval iv) const { return order_.interval_members(iv); }

  // Objects/attributes whose generated concept is this one (reduced labeling).
  std::vector<std::string> object_labels(int c) const;
  std::vector<std::string> attribute_labels(int c) const;

  // The context (L, L, <=) with elements named after concept indices.
  FormalContext generic_context() const;

 private:
  ConceptLattice(FormalContext ctx, std::vector<Concept> concepts);

  FormalContext context_;
  std::vector<Concept> concepts_;
  Poset order_;
  std::unordered_map<Bitset, int, BitsetHash> by_extent_;
};

// The context (P, P, <=) of a finite ordered set, rows and columns indexed
// by the poset's elements and carrying its names.
FormalContext order_context(const Poset& p);

// Builds a concept lattice isomorphic to the given finite lattice via its
// order relation; element names are carried over. Throws StructuralError
// if the poset is not a lattice.
ConceptLattice lattice_from_poset(const Poset& p);

// A contranominal-scale subcontext of dimension k: object/attribute subsets
// whose induced incidence is "not equal". Optional pins force particular
// elements into the witness. First witness in lexicographic search order.
std::optional<Subcontext> find_boolean_subcontext(const FormalContext& ctx, int k,
                                                  std::optional<std::size_t> pin_object = {},
                                                  std::optional<std::size_t> pin_attribute = {});

}  // namespace latfact

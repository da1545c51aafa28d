#pragma once

#include <cstdint>
#include <optional>

#include "lattice.hpp"

namespace latfact {

// An incidence superset J ⊇ I whose rows are intents and columns are
// extents of the base context.
struct BlockRelation {
  FormalContext base;
  std::vector<Bitset> rows;                    // J, object-major
  std::vector<std::pair<int, int>> added;      // J \ I in insertion order

  bool incident(std::size_t g, std::size_t m) const { return rows[g].test(m); }
  Bitset column(std::size_t m) const;
  FormalContext as_context() const;  // (G, M, J)
};

struct ToleranceResult {
  BlockRelation block;
  ConceptLattice factor;        // B(G, M, J)
  std::vector<int> lower_map;   // concept -> factor block generated by its extent
  std::vector<int> upper_map;   // concept -> factor block generated by its intent
};

// J̃ = I ∪ (C×B) for S = [(A,B),(C,D)].
std::vector<Bitset> seed_relation(const ConceptLattice& lat, Interval iv);

struct BlockViolation {
  bool is_object = true;
  int index = -1;
};

// Checks the block-relation law against the base lattice's intents and
// extents; returns the first violating object or attribute. Requires I ⊆ J.
std::optional<BlockViolation> block_relation_violation(const ConceptLattice& lat,
                                                       const std::vector<Bitset>& relation);

inline bool is_block_relation(const ConceptLattice& lat, const std::vector<Bitset>& relation) {
  return !block_relation_violation(lat, relation).has_value();
}

// The finest block relation containing an arbitrary seed ⊇ I, via the
// worklist fixpoint: a row that is not an intent grows to the smallest
// intent containing it (its closure under the original incidence), dually
// for columns; touched elements are re-enqueued. The result is independent
// of processing order; `shuffle_seed` randomizes that order for
// determinism testing.
BlockRelation finest_block_relation(const ConceptLattice& lat, std::vector<Bitset> seed,
                                    std::optional<std::uint64_t> shuffle_seed = {});

// Seeds with I ∪ (C×B) for the interval and attaches the factor lattice
// and the two block maps.
ToleranceResult finest_imploding_block_relation(const ConceptLattice& lat, Interval iv,
                                                std::optional<std::uint64_t> shuffle_seed = {});

}  // namespace latfact

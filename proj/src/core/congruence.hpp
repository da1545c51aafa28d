#pragma once

#include "lattice.hpp"

namespace latfact {

// Result of imploding an interval with the finest complete congruence.
// The congruence is realized by the largest compatible subcontext [O,P]
// inside the bounds [H,N]; the factor is the concept lattice of [O,P] and
// every original concept (A,B) maps to the factor concept (A∩O, B∩P).
struct CongruenceResult {
  Subcontext compatible;        // [O,P]
  ConceptLattice factor;        // B([O,P])
  std::vector<int> class_map;   // original concept index -> factor index
  Bitset bound_objects;         // H
  Bitset bound_attributes;      // N
};

// Bounds for subcontexts whose congruence implodes S = [(A,B),(C,D)]:
// H = A ∪ (G \ C), N = D ∪ (M \ B). Requires a reduced context.
std::pair<Bitset, Bitset> congruence_bounds(const ConceptLattice& lat, Interval iv);

// Is (A∩H, B∩N) a concept of [H,N] for every concept (A,B)?
bool is_compatible(const FormalContext& ctx, const Subcontext& sub);
bool is_compatible(const ConceptLattice& lat, const Subcontext& sub);

// The finest congruence that implodes the given interval, via the largest
// compatible subcontext within the bounds. Computed as an arrow-closure
// greatest fixpoint, verified with is_compatible; falls back to brute
// force over all subcontexts within bounds if verification fails.
CongruenceResult finest_imploding_congruence(const ConceptLattice& lat, Interval iv);

}  // namespace latfact

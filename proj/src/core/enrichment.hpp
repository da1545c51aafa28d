#pragma once

#include "interval_relation.hpp"
#include "lattice.hpp"

namespace latfact {

// Incidence extended by C_i × B_i for interval endpoints (A_i,B_i),(C_i,D_i).
struct EnrichedContext {
  FormalContext base;
  FormalContext enriched;
  std::vector<std::pair<int, int>> added;  // (object, attribute), sorted
  bool intervals_disjoint = true;          // informational; not required
};

// Simultaneous enrichment by all intervals at once.
EnrichedContext enrich(const ConceptLattice& lat, const std::vector<Interval>& intervals);

// Iterative enrichment: after each step the next interval's endpoints are
// re-resolved as concepts of the enriched context (extent closures).
EnrichedContext enrich_iterative(const ConceptLattice& lat, const std::vector<Interval>& intervals);

// A context (H, N, <=) with V ⊆ H and U ⊆ N, where V holds the
// θ-∨-irreducible elements (join-irreducibles plus the elements outside S
// with at most one lower neighbour outside S) and U dually. H and N extend
// V and U by the elements that stay irreducible in the enriched order
// context; for nested intervals the completion can turn elements with two
// covers outside S irreducible again, so V and U alone do not always
// suffice.
struct ThetaIrreducibleContext {
  FormalContext context;
  std::vector<int> object_elements;          // lattice element per context object (H)
  std::vector<int> attribute_elements;       // lattice element per context attribute (N)
  std::vector<int> theta_join_irreducible;   // V
  std::vector<int> theta_meet_irreducible;   // U
};

ThetaIrreducibleContext theta_irreducible_context(const Poset& lattice, Interval iv);

enum class EnrichmentVerdict { isomorphic_to_factor, dm_completion_of_factor };

struct EnrichmentFactorization {
  ConceptLattice base_lattice;  // B of the θ-irreducible (or generic) context
  EnrichedContext enrichment;
  ConceptLattice result;  // B(K_S)
  bool pure = true;
  EnrichmentVerdict verdict = EnrichmentVerdict::isomorphic_to_factor;
  // Endpoints of S as concepts of the base context: C_S × B_S is the block.
  Bitset block_extent;  // C_S
  Bitset block_intent;  // B_S
  FactorStructure order_factor;  // L/θ_S computed on the order side

  // The four-case map φ from B(base context) to B(K_S); requires pure.
  int map_concept(int concept_idx) const;
};

// Builds a context for the lattice (θ-irreducible by default, generic on
// request), enriches it by the interval, and certifies the outcome against
// the order-side factorization: isomorphic for pure intervals, the
// Dedekind-MacNeille completion of the factor for nested ones.
EnrichmentFactorization factor_via_enrichment(const Poset& lattice, Interval iv,
                                              bool use_generic = false);

// Multi-interval variant; no pure/nested verdict is attached.
ConceptLattice factor_via_enrichment_multi(const Poset& lattice,
                                           const std::vector<Interval>& intervals,
                                           bool use_generic = false);

struct DmCompletion {
  ConceptLattice lattice;        // B(P, P, <=)
  std::vector<int> embedding;    // poset element -> completion element
  std::vector<bool> added;       // completion elements without a preimage
};

// Dedekind-MacNeille completion of a finite partial order via cuts.
DmCompletion dm_completion(const Poset& p);

}  // namespace latfact

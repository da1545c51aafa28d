#pragma once

#include <string>
#include <string_view>

#include "interval_relation.hpp"
#include "lattice.hpp"

namespace latfact {

// Burmeister .cxt: "B", blank, |G|, |M|, blank, object names, attribute
// names, rows over {'.','X'}. Accepts \r\n and \n; emits \n.
FormalContext parse_cxt(std::string_view text);
std::string to_cxt(const FormalContext& ctx);

// {"concepts":[{"extent":[...],"intent":[...]},...],"covers":[[lo,hi],...]}
// with lectic indexing.
std::string lattice_to_json(const ConceptLattice& lat);

// Hasse diagram in DOT: reduced labeling, cover edges, same-rank per height.
std::string lattice_to_dot(const ConceptLattice& lat);

// Factor structure exports, annotated with class membership.
std::string factor_to_json(const FactorStructure& f, const Poset& base);
std::string factor_to_dot(const FactorStructure& f, const Poset& base);

struct LatticeJson {
  Poset order;
  // Display names reconstructed from extents where possible.
};

// Reads a lattice JSON produced by lattice_to_json back into a poset.
Poset parse_lattice_json(std::string_view text);

// Interval endpoint specification "bottom=<ep>:top=<ep>" where <ep> is
//   obj:n1,n2,...  extent generators (closure taken)
//   att:n1,n2,...  intent generators
//   idx:<k>        concept by lectic index
//   top / bottom   lattice top or bottom
//   n1,n2,...      bare list, treated as objects
Interval resolve_interval_spec(const ConceptLattice& lat, std::string_view spec);

}  // namespace latfact

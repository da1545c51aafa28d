#pragma once

// Shared test fixtures: the running 8x5 context and a family of small
// lattices (bounded crowns, a grid, factor shapes) used across the suites.

#include <string>
#include <vector>

#include "core/context.hpp"
#include "core/lattice.hpp"
#include "core/poset.hpp"

namespace fixtures {

using latfact::Bitset;
using latfact::ConceptLattice;
using latfact::FormalContext;
using latfact::Interval;
using latfact::Poset;

// Objects 1..8, attributes a..e.
inline FormalContext running_context() {
  return FormalContext::from_rows(
      {"1", "2", "3", "4", "5", "6", "7", "8"}, {"a", "b", "c", "d", "e"},
      {"XX...", "X.X..", ".XXXX", "XXX..", ".X.XX", "..XXX", "...X.", "....X"});
}

inline Interval interval_by_extents(const ConceptLattice& lat,
                                    const std::vector<std::string>& bottom_objects,
                                    const std::vector<std::string>& top_objects) {
  Bitset b = lat.context().object_set(bottom_objects);
  Bitset t = lat.context().object_set(top_objects);
  return Interval{*lat.find_by_extent(lat.context().closure_objects(b)),
                  *lat.find_by_extent(lat.context().closure_objects(t))};
}

// S1 = [({4},{a,b,c}), (G,∅)], S2 = [({3},{b,c,d,e}), ({3,5,6,8},{e})].
inline Interval running_s1(const ConceptLattice& lat) {
  return interval_by_extents(lat, {"4"}, {"1", "2", "3", "4", "5", "6", "7", "8"});
}
inline Interval running_s2(const ConceptLattice& lat) {
  return interval_by_extents(lat, {"3"}, {"3", "5", "6", "8"});
}

// Bottom, three atoms, three coatoms, top; the atoms/coatoms form a
// crown of order 3. Element 0 is the bottom, 7 the top.
inline Poset crown3_lattice() {
  return Poset::from_covers(8, {{0, 1},
                                {0, 2},
                                {0, 3},
                                {1, 4},
                                {1, 5},
                                {2, 4},
                                {2, 6},
                                {3, 5},
                                {3, 6},
                                {4, 7},
                                {5, 7},
                                {6, 7}});
}

// The nested 2-element interval of crown3_lattice and the three-interval
// cycle on the same carrier.
inline Interval crown3_nested() { return Interval{1, 4}; }
inline std::vector<Interval> crown3_cycle() {
  return {Interval{1, 4}, Interval{3, 5}, Interval{2, 6}};
}
// The 4-element pure interval [bottom, coatom 4].
inline Interval crown3_pure() { return Interval{0, 4}; }

// The 7-element factor of crown3_lattice modulo its nested interval,
// transcribed as drawn: an ordered set that is not a lattice.
inline Poset crown3_factor() {
  return Poset::from_covers(
      7, {{0, 1}, {0, 2}, {1, 4}, {2, 4}, {2, 3}, {3, 5}, {4, 5}, {1, 6}, {6, 3}});
}

// A 5x3 grid (staircase) lattice; element 2 is the bottom, 12 the top.
inline Poset staircase() {
  return Poset::from_covers(
      15, {{1, 0},  {2, 1},  {0, 3},   {1, 4},   {2, 5},  {4, 3},  {5, 4},  {3, 6},
           {4, 7},  {5, 8},  {7, 6},   {8, 7},   {6, 9},  {7, 10}, {8, 11}, {10, 9},
           {11, 10}, {9, 12}, {10, 13}, {11, 14}, {13, 12}, {14, 13}});
}
inline std::vector<Interval> staircase_intervals() {
  return {Interval{4, 3}, Interval{11, 10}};
}

// The 13-element factor of the staircase modulo both intervals, as drawn.
inline Poset staircase_factor() {
  return Poset::from_covers(13, {{2, 1},
                                 {2, 4},
                                 {1, 0},
                                 {4, 3},
                                 {0, 3},
                                 {4, 7},
                                 {3, 6},
                                 {7, 6},
                                 {6, 5},
                                 {6, 9},
                                 {9, 8},
                                 {5, 8},
                                 {9, 12},
                                 {8, 10},
                                 {12, 11},
                                 {11, 10}});
}

// The 8-element factor of the running lattice modulo S1, as drawn.
inline Poset running_factor_s1() {
  return Poset::from_covers(
      8, {{0, 1}, {1, 3}, {1, 5}, {3, 4}, {5, 4}, {4, 6}, {4, 7}, {6, 2}, {7, 2}});
}

// Six 2-element intervals chained in a cycle; a 12-element ordered set
// (not a lattice).
inline Poset six_interval_cycle() {
  return Poset::from_covers(12, {{0, 3},
                                 {0, 4},
                                 {1, 4},
                                 {1, 5},
                                 {2, 5},
                                 {2, 7},
                                 {6, 7},
                                 {6, 9},
                                 {8, 9},
                                 {8, 11},
                                 {10, 11},
                                 {10, 3}});
}
inline std::vector<Interval> six_intervals() {
  return {Interval{0, 3}, Interval{1, 4}, Interval{2, 5},
          Interval{6, 7}, Interval{8, 9}, Interval{10, 11}};
}

// Bottom, a crown of order 4 in the middle, top. Two disjoint pure
// 2-element intervals whose joint implosion is no lattice.
inline Poset crown4_lattice() {
  return Poset::from_covers(10, {{0, 1},
                                 {0, 2},
                                 {0, 3},
                                 {0, 4},
                                 {1, 5},
                                 {1, 6},
                                 {2, 6},
                                 {2, 7},
                                 {3, 7},
                                 {3, 8},
                                 {4, 8},
                                 {4, 5},
                                 {5, 9},
                                 {6, 9},
                                 {7, 9},
                                 {8, 9}});
}
inline std::vector<Interval> crown4_intervals() {
  return {Interval{3, 7}, Interval{2, 6}};
}

// Bottom, a crown of order 5, top; element names match the 12x12 order
// context below (element i has name i+1; 11 is the top, 12 the bottom).
inline Poset crown5_lattice() {
  std::vector<std::string> names;
  for (int i = 1; i <= 12; ++i) names.push_back(std::to_string(i));
  return Poset::from_covers(12,
                            {{11, 5}, {11, 6}, {11, 7}, {11, 8}, {11, 9},
                             {5, 0},  {5, 1},  {6, 1},  {6, 2},  {7, 2},
                             {7, 3},  {8, 3},  {8, 4},  {9, 4},  {9, 0},
                             {0, 10}, {1, 10}, {2, 10}, {3, 10}, {4, 10}},
                            std::move(names));
}
// S1 = [8, 3] and S2 = [7, 2] in element names (0-based: [7,2], [6,1]).
inline std::vector<Interval> crown5_intervals() {
  return {Interval{7, 2}, Interval{6, 1}};
}

// The order context of crown5_lattice, transcribed with its element names.
inline FormalContext crown5_generic_context() {
  std::vector<std::string> names;
  for (int i = 1; i <= 12; ++i) names.push_back(std::to_string(i));
  return FormalContext::from_rows(names, names,
                                  {
                                      "X.........X.",  // 1
                                      ".X........X.",  // 2
                                      "..X.......X.",  // 3
                                      "...X......X.",  // 4
                                      "....X.....X.",  // 5
                                      "XX...X....X.",  // 6
                                      ".XX...X...X.",  // 7
                                      "..XX...X..X.",  // 8
                                      "...XX...X.X.",  // 9
                                      "X...X....XX.",  // 10
                                      "..........X.",  // 11
                                      "XXXXXXXXXXXX",  // 12
                                  });
}

// A 15x15 order context of the running lattice, transcribed with objects
// 1..15 and attributes a..o.
inline FormalContext running_generic_context() {
  std::vector<std::string> objs;
  for (int i = 1; i <= 15; ++i) objs.push_back(std::to_string(i));
  std::vector<std::string> atts;
  for (char c = 'a'; c <= 'o'; ++c) atts.push_back(std::string(1, c));
  return FormalContext::from_rows(objs, atts,
                                  {
                                      "XX.......X...X.",  // 1
                                      "X.X......XX....",  // 2
                                      ".XXXX..XXX.XX.X",  // 3
                                      "XXX...X.XXX..X.",  // 4
                                      ".X.XX....X.XX..",  // 5
                                      "..XXX....X..X.X",  // 6
                                      "...X.....X.....",  // 7
                                      "....X....X.....",  // 8
                                      "XXXXXXXXXXXXXXX",  // 9
                                      ".XX.....XX.....",  // 10
                                      "..X......X.....",  // 11
                                      ".X.......X.....",  // 12
                                      ".........X.....",  // 13
                                      "X........X.....",  // 14
                                      "...XX....X..X..",  // 15
                                  });
}

// Every lattice fixture, for exhaustive sweeps.
inline std::vector<Poset> lattice_fixtures() {
  std::vector<Poset> out;
  out.push_back(ConceptLattice::build(running_context()).order());
  out.push_back(crown3_lattice());
  out.push_back(staircase());
  out.push_back(running_factor_s1());
  out.push_back(crown4_lattice());
  out.push_back(crown5_lattice());
  return out;
}

}  // namespace fixtures

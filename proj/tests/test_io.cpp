#include <doctest.h>

#include <json.hpp>

#include "core/io.hpp"
#include "fixtures.hpp"

using namespace latfact;

static const char* kRunningCxt =
    "B\n\n8\n5\n\n1\n2\n3\n4\n5\n6\n7\n8\na\nb\nc\nd\ne\n"
    "XX...\nX.X..\n.XXXX\nXXX..\n.X.XX\n..XXX\n...X.\n....X\n";

TEST_CASE("cxt serialization is bit-exact") {
  CHECK(to_cxt(fixtures::running_context()) == kRunningCxt);
}

TEST_CASE("cxt parsing round-trips and accepts crlf") {
  FormalContext parsed = parse_cxt(kRunningCxt);
  CHECK(parsed == fixtures::running_context());

  std::string crlf;
  for (char c : std::string(kRunningCxt)) {
    if (c == '\n') crlf += "\r\n";
    else crlf += c;
  }
  CHECK(parse_cxt(crlf) == fixtures::running_context());

  FormalContext empty({}, {}, {});
  CHECK(parse_cxt(to_cxt(empty)) == empty);
}

TEST_CASE("cxt parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_cxt("Q\n\n1\n1\n\ng\nm\nX\n"),
                       "cxt parse error at line 1: expected 'B'", InputError);
  CHECK_THROWS_AS(parse_cxt("B\n\nx\n1\n\ng\nm\nX\n"), InputError);
  CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\n\ng\n"), InputError);
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng\nm\n?\n"), InputError);
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng\nm\nXX\n"), InputError);
}

TEST_CASE("lattice json export and import") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());
  std::string json = lattice_to_json(run);
  CHECK(json.find("\"concepts\"") != std::string::npos);
  CHECK(json.find("\"covers\"") != std::string::npos);

  Poset back = parse_lattice_json(json);
  CHECK(back.size() == run.size());
  CHECK(lattices_isomorphic(back, run.order()));

  CHECK_THROWS_AS(parse_lattice_json("{}"), InputError);
  CHECK_THROWS_AS(parse_lattice_json("not json"), nlohmann::json::exception);
}

TEST_CASE("dot export") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());
  std::string dot = lattice_to_dot(run);
  CHECK(dot.find("digraph lattice") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  // One edge line per cover pair.
  std::size_t edges = 0, at = 0;
  while ((at = dot.find(" -> ", at)) != std::string::npos) {
    ++edges;
    ++at;
  }
  CHECK(edges == run.order().cover_pairs().size());
  // Deterministic output.
  CHECK(dot == lattice_to_dot(run));
}

TEST_CASE("factor exports") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());
  IntervalRelation rel = IntervalRelation::make(run.order(), {fixtures::running_s1(run)});
  FactorStructure f = leq_theta(rel);
  std::string json = factor_to_json(f, run.order());
  CHECK(json.find("\"kind\": \"lattice\"") != std::string::npos);
  std::string dot = factor_to_dot(f, run.order());
  CHECK(dot.find("digraph factor") != std::string::npos);

  Poset c3 = fixtures::crown3_lattice();
  FactorStructure pre = leq_theta(IntervalRelation::make(c3, fixtures::crown3_cycle()));
  CHECK(factor_to_json(pre, c3).find("\"kind\": \"preorder\"") != std::string::npos);
  CHECK_THROWS_AS(factor_to_dot(pre, c3), StructuralError);
}

TEST_CASE("interval spec resolution") {
  ConceptLattice run = ConceptLattice::build(fixtures::running_context());
  const FormalContext& ctx = run.context();

  Interval s2 = resolve_interval_spec(run, "bottom=3:top=att:e");
  CHECK(run.at(s2.bottom).extent == ctx.object_set({"3"}));
  CHECK(run.at(s2.top).extent == ctx.object_set({"3", "5", "6", "8"}));

  Interval s1 = resolve_interval_spec(run, "bottom=obj:4:top=top");
  CHECK(run.at(s1.bottom).extent == ctx.object_set({"4"}));
  CHECK(s1.top == run.top());

  Interval by_idx = resolve_interval_spec(run, "bottom=idx:3:top=idx:0");
  CHECK(by_idx.bottom == 3);
  CHECK(by_idx.top == 0);

  Interval lists = resolve_interval_spec(run, "bottom=3,5:top=att:d,e");
  CHECK(run.at(lists.bottom).extent == ctx.object_set({"3", "5"}));
  CHECK(run.at(lists.top).extent == ctx.object_set({"3", "5", "6"}));

  CHECK_THROWS_AS(resolve_interval_spec(run, "bottom=3"), InputError);
  CHECK_THROWS_AS(resolve_interval_spec(run, "nol=3:top=top"), InputError);
  CHECK_THROWS_AS(resolve_interval_spec(run, "bottom=9:top=top"), InputError);
  // Bottom above top.
  CHECK_THROWS_AS(resolve_interval_spec(run, "bottom=top:top=3"), InputError);
}

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latfact/latfact.h"

namespace {

struct ContextDeleter {
  void operator()(lf_context* c) const { lf_context_free(c); }
};
struct LatticeDeleter {
  void operator()(lf_lattice* l) const { lf_lattice_free(l); }
};
struct FactorDeleter {
  void operator()(lf_factor* f) const { lf_factor_free(f); }
};
using ContextPtr = std::unique_ptr<lf_context, ContextDeleter>;
using LatticePtr = std::unique_ptr<lf_lattice, LatticeDeleter>;
using FactorPtr = std::unique_ptr<lf_factor, FactorDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  lf_string_free(s);
  return out;
}

[[noreturn]] void die(lf_status st) {
  std::cerr << "error: " << lf_last_error() << "\n";
  std::exit(static_cast<int>(st));
}

void check(lf_status st) {
  if (st != LF_OK) die(st);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(1);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Loads .cxt or lattice JSON; lattice JSON is turned into its order context.
void load_input(const std::string& path, bool auto_reduce, ContextPtr& ctx, LatticePtr& lat) {
  std::string text = read_file(path);
  if (ends_with(path, ".json") || (!text.empty() && text[0] == '{')) {
    lf_lattice* l = nullptr;
    check(lf_lattice_from_json(text.c_str(), text.size(), &l));
    lat.reset(l);
    lf_context* c = nullptr;
    check(lf_lattice_generic_context(lat.get(), &c));
    ctx.reset(c);
    return;
  }
  lf_context* c = nullptr;
  check(lf_context_parse_cxt(text.c_str(), text.size(), &c));
  ctx.reset(c);
  if (auto_reduce) {
    lf_context* red = nullptr;
    char* report = nullptr;
    check(lf_context_reduce(ctx.get(), &red, &report));
    std::cerr << "reduced input context:\n" << take_string(report);
    ctx.reset(red);
  }
  lf_lattice* l = nullptr;
  check(lf_lattice_build(ctx.get(), &l));
  lat.reset(l);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    std::exit(1);
  }
  out << content;
}

int oracle_budget_from_env(int which) {
  const char* v = std::getenv("ORACLE_BUDGET");
  if (!v) return 0;
  int n = std::atoi(v);
  if (n <= 0) return 0;
  return which == 2 ? 2 * n : n;  // elements get twice the dimension budget
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latfact — implode lattice intervals via congruences, tolerances, "
               "interval relations, and context enrichment"};
  app.set_version_flag("--version", "latfact 1.0.0");
  app.require_subcommand(1);

  std::string input, output, format = "text";
  std::vector<std::string> interval_specs;
  bool auto_reduce = false;

  auto* show = app.add_subcommand("show", "concept count, irreducibles, exports");
  show->add_option("input", input, "context (.cxt) or lattice JSON")->required();
  show->add_option("-o,--out", output, "write to file instead of stdout");
  show->add_option("-f,--format", format, "text | json | dot | cxt");

  std::string method = "interval";
  bool require_lattice = false, use_generic = false, verify_after = false;
  auto* factor = app.add_subcommand("factor", "factorize by imploding intervals");
  factor->add_option("input", input, "context (.cxt) or lattice JSON")->required();
  factor->add_option("-m,--method", method, "congruence | tolerance | interval | context");
  factor->add_option("-i,--interval", interval_specs, "bottom=<ep>:top=<ep> (repeatable)")
      ->required();
  factor->add_option("-o,--out", output, "write the report to a file");
  factor->add_option("-f,--format", format, "text | json | dot | cxt");
  factor->add_flag("--auto-reduce", auto_reduce,
                   "reduce a non-reduced input instead of failing (congruence)");
  factor->add_flag("--require-lattice", require_lattice, "exit 2 if the factor is no lattice");
  factor->add_flag("--use-generic", use_generic, "context method: use the generic context");
  factor->add_flag("--verify", verify_after, "cross-check with the oracles afterwards");

  bool iterative = false;
  auto* enrich_cmd = app.add_subcommand("enrich", "enrich the incidence by intervals");
  enrich_cmd->add_option("input", input, "context (.cxt)")->required();
  enrich_cmd->add_option("-i,--interval", interval_specs, "bottom=<ep>:top=<ep> (repeatable)")
      ->required();
  enrich_cmd->add_flag("--iterative", iterative, "enrich one interval after the other");
  enrich_cmd->add_option("-o,--out", output, "write the enriched .cxt to a file");

  auto* verify = app.add_subcommand("verify", "run oracle cross-checks (desk scale)");
  verify->add_option("input", input, "context (.cxt)")->required();

  CLI11_PARSE(app, argc, argv);

  ContextPtr ctx;
  LatticePtr lat;

  if (show->parsed()) {
    load_input(input, false, ctx, lat);
    char* s = nullptr;
    if (format == "json") {
      check(lf_lattice_to_json(lat.get(), &s));
      emit(output, take_string(s));
    } else if (format == "dot") {
      check(lf_lattice_to_dot(lat.get(), &s));
      emit(output, take_string(s));
    } else if (format == "cxt") {
      check(lf_context_to_cxt(ctx.get(), &s));
      emit(output, take_string(s));
    } else {
      check(lf_lattice_stats_json(lat.get(), &s));
      std::string stats = take_string(s);
      auto pos = stats.find("\"summary\": \"");
      std::string line = stats.substr(pos + 12);
      line = line.substr(0, line.find('"'));
      emit(output, line + "\n");
    }
    return 0;
  }

  if (factor->parsed()) {
    load_input(input, auto_reduce, ctx, lat);
    std::vector<int> bottoms, tops;
    for (const auto& spec : interval_specs) {
      int b = 0, t = 0;
      check(lf_lattice_resolve_interval(lat.get(), spec.c_str(), &b, &t));
      bottoms.push_back(b);
      tops.push_back(t);
    }
    if (method == "context" && use_generic) method = "context-generic";
    lf_factor* f = nullptr;
    lf_status st = lf_factor_run(lat.get(), method.c_str(), bottoms.data(), tops.data(),
                                 bottoms.size(), require_lattice ? 1 : 0, &f);
    if (st != LF_OK && f == nullptr) die(st);
    FactorPtr fp(f);
    char* s = nullptr;
    if (format == "dot") {
      check(lf_factor_to_dot(fp.get(), &s));
      emit(output, take_string(s));
    } else if (format == "cxt") {
      check(lf_factor_context_cxt(fp.get(), &s));
      emit(output, take_string(s));
    } else {
      check(lf_factor_report_json(fp.get(), &s));
      emit(output, take_string(s));
    }
    if (verify_after) {
      char* rep = nullptr;
      lf_status vst = lf_verify(ctx.get(), oracle_budget_from_env(0), oracle_budget_from_env(1),
                                oracle_budget_from_env(2), &rep);
      std::cerr << take_string(rep);
      if (vst != LF_OK) die(vst);
    }
    if (st != LF_OK) {
      std::cerr << "error: " << lf_last_error() << "\n";
      return static_cast<int>(st);
    }
    return 0;
  }

  if (enrich_cmd->parsed()) {
    load_input(input, false, ctx, lat);
    std::vector<int> bottoms, tops;
    for (const auto& spec : interval_specs) {
      int b = 0, t = 0;
      check(lf_lattice_resolve_interval(lat.get(), spec.c_str(), &b, &t));
      bottoms.push_back(b);
      tops.push_back(t);
    }
    lf_context* enriched = nullptr;
    char* delta = nullptr;
    check(lf_enrich(lat.get(), bottoms.data(), tops.data(), bottoms.size(), iterative ? 1 : 0,
                    &enriched, &delta));
    ContextPtr ep(enriched);
    std::cerr << "added incidences:\n" << take_string(delta);
    char* s = nullptr;
    check(lf_context_to_cxt(ep.get(), &s));
    emit(output, take_string(s));
    return 0;
  }

  if (verify->parsed()) {
    std::string text = read_file(input);
    lf_context* c = nullptr;
    check(lf_context_parse_cxt(text.c_str(), text.size(), &c));
    ctx.reset(c);
    char* rep = nullptr;
    lf_status st = lf_verify(ctx.get(), oracle_budget_from_env(0), oracle_budget_from_env(1),
                             oracle_budget_from_env(2), &rep);
    if (rep) std::cout << take_string(rep);
    if (st != LF_OK) die(st);
    return 0;
  }

  return 0;
}

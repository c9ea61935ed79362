// reciprocity: compute counting functions and verify reciprocity theorems.
//
//   reciprocity arrangement FILE
//   reciprocity ehrhart FILE [--series] [--reciprocity] [--triangulate] [--seed N] [--horizon N]
//   reciprocity chromatic FILE [--pairs T]... [--iop]
//   reciprocity ppartition FILE [--strict] [--reciprocity]
//   reciprocity verify SUITE [--seed N] [--size tiny|small|medium]
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 input error.
// --json may appear anywhere on the command line.

#include "reciprocity/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace rc = reciprocity::cli;

int main(int argc, char** argv) {
  CLI::App app{"Counting functions and combinatorial reciprocity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the run report as JSON");

  std::string file;
  auto* arr = app.add_subcommand("arrangement", "characteristic polynomial and region counts");
  arr->add_option("file", file, "arrangement file")->required();

  rc::EhrhartOptions eopt;
  auto* ehr = app.add_subcommand("ehrhart", "Ehrhart quasipolynomial of a rational polytope");
  ehr->add_option("file", file, "polytope file")->required();
  ehr->add_flag("--series", eopt.series, "Ehrhart series (lattice polytopes)");
  ehr->add_flag("--reciprocity", eopt.reciprocity, "check ehr(-t) = (-1)^d ehr_interior(t)");
  ehr->add_flag("--triangulate", eopt.triangulate, "regular triangulation by random lifting");
  ehr->add_option("--seed", eopt.seed, "lifting seed");
  ehr->add_option("--horizon", eopt.horizon, "largest t for the reciprocity check")->check(CLI::Range(1u, 64u));

  rc::ChromaticOptions copt;
  auto* chr = app.add_subcommand("chromatic", "chromatic polynomial and acyclic orientations");
  chr->add_option("file", file, "graph file")->required();
  chr->add_option("--pairs", copt.pairs, "count compatible (coloring, orientation) pairs at t")
      ->check(CLI::Range(1u, 16u));
  chr->add_flag("--iop", copt.iop, "unit cube inside-out polytope cross-checks (|V| <= 5)");

  rc::PPartitionOptions popt;
  auto* ppa = app.add_subcommand("ppartition", "P-partition generating functions");
  ppa->add_option("file", file, "poset file")->required();
  ppa->add_flag("--strict", popt.strict, "report strict P-partition counts");
  ppa->add_flag("--reciprocity", popt.reciprocity, "check P(1/z) = (-z)^d P_strict(z)");

  std::string suite;
  std::uint64_t seed = 42;
  std::string size = "small";
  auto* ver = app.add_subcommand("verify", "seeded property suites");
  ver->add_option("suite", suite, "zaslavsky, ehrhart, chromatic, ppartition, euler or all")->required();
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--size", size, "tiny, small or medium");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  rc::RunReport report;
  try {
    if (*arr) report = rc::cmd_arrangement(file);
    if (*ehr) report = rc::cmd_ehrhart(file, eopt);
    if (*chr) report = rc::cmd_chromatic(file, copt);
    if (*ppa) report = rc::cmd_ppartition(file, popt);
    if (*ver) report = rc::cmd_verify(suite, seed, size);
  } catch (const reciprocity::PosetError& e) {
    std::cerr << "input error (" << e.axiom() << "): " << e.what() << "\n";
    return 2;
  } catch (const reciprocity::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (as_json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.passed() ? 0 : 1;
}

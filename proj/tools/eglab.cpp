#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eg/io.hpp"
#include "eg/lifting.hpp"
#include "eg/search.hpp"
#include "eg/sweep.hpp"

namespace {

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw eg::ConfigError("cannot write '" + path + "'");
  out << content;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

const char* okfail(const std::optional<bool>& v) { return v ? (*v ? "ok" : "fail") : "n/a"; }

std::string render_report(const eg::MultiGraph& g, const eg::RegularityInfo& reg, int k,
                          const eg::ConditionReport& rep) {
  std::ostringstream out;
  out << "p " << g.p << '\n' << "q " << g.q() << '\n';
  out << "regular " << yn(reg.is_regular) << '\n';
  out << "degree ";
  if (reg.is_regular) out << reg.degree; else out << '-';
  out << '\n' << "r ";
  if (reg.r >= 0) out << reg.r; else out << '-';
  out << '\n' << "k " << k << '\n';
  out << "kp " << rep.p << '\n' << "kq " << rep.q << '\n';
  out << "lo_value " << rep.lo_value << '\n';
  out << "lo_remainder " << rep.lo_remainder << '\n';
  out << "lo_divides " << yn(rep.lo_divides) << '\n';
  out << "p_odd " << okfail(rep.p_odd_ok) << '\n';
  out << "k_odd " << okfail(rep.k_odd_ok) << '\n';
  out << "feasible " << yn(rep.all_pass()) << '\n';
  return out.str();
}

int run_check(const std::string& graph_path, int k) {
  const eg::MultiGraph g = eg::read_graph_file(graph_path);
  const eg::RegularityInfo reg = eg::regularity(g);
  eg::ConditionReport rep;
  if (k > 0) {
    rep = eg::union_feasibility(g, k);
  } else if (reg.is_regular && reg.r >= 0) {
    rep = eg::union_feasibility(g, 1);
  } else {
    rep = eg::lo_condition(g.p, g.q());
  }
  std::cout << render_report(g, reg, k > 0 ? k : 1, rep);
  return rep.all_pass() ? 0 : 1;
}

int run_verify(const std::string& graph_path, const std::string& labeling_path) {
  const eg::MultiGraph g = eg::read_graph_file(graph_path);
  const eg::EdgeLabeling l = eg::read_labeling_file(labeling_path, g);
  const eg::GracefulVerdict verdict = eg::verify_edge_graceful(g, l);
  switch (verdict.status) {
    case eg::GracefulVerdict::Status::valid:
      std::cout << "valid\n";
      return 0;
    case eg::GracefulVerdict::Status::duplicate:
      std::cout << "duplicate: " << verdict.detail << '\n';
      return 1;
    case eg::GracefulVerdict::Status::invalid_labeling:
      std::cout << "invalid-labeling: " << verdict.detail << '\n';
      return 1;
  }
  return 2;
}

int run_verify_striation(const std::string& graph_path, const std::string& striation_path) {
  const eg::MultiGraph g = eg::read_graph_file(graph_path);
  const eg::Striation s = eg::read_striation_file(striation_path, g);
  const eg::StriationVerdict verdict = eg::verify_striation(g, s);
  switch (verdict.status) {
    case eg::StriationVerdict::Status::valid:
      std::cout << "valid\n";
      return 0;
    case eg::StriationVerdict::Status::factorization_invalid:
      std::cout << "factorization-invalid: " << verdict.detail << '\n';
      return 1;
    case eg::StriationVerdict::Status::not_edge_graceful:
      std::cout << "not-edge-graceful: " << verdict.detail << '\n';
      return 1;
    case eg::StriationVerdict::Status::missing_residue:
      std::cout << "missing-residue: " << verdict.detail << '\n';
      return 1;
  }
  return 2;
}

int run_lift(bool striae, const std::string& graph_path, const std::string& input_path, int k,
             const std::string& out_graph, const std::string& out_labels) {
  const eg::MultiGraph g = eg::read_graph_file(graph_path);
  eg::EdgeLabeling lifted;
  if (striae) {
    const eg::Striation s = eg::read_striation_file(input_path, g);
    lifted = eg::lift_striation(g, s, k);
  } else {
    const eg::EdgeLabeling base = eg::read_labeling_file(input_path, g);
    lifted = eg::lift_shift(g, base, k);
  }
  const eg::MultiGraph kg = eg::disjoint_union(g, k);
  const std::string graph_text = eg::graph_to_string(kg);
  const std::string label_text = eg::labeling_to_string(lifted);
  if (out_graph.empty() && out_labels.empty()) {
    std::cout << graph_text << '\n' << label_text;
    return 0;
  }
  emit(out_graph, graph_text);
  emit(out_labels, label_text);
  return 0;
}

int run_search(bool striation_mode, const std::string& graph_path, const eg::SearchBudget& budget,
               const std::string& out_path) {
  const eg::MultiGraph g = eg::read_graph_file(graph_path);
  const eg::SearchOutcome outcome =
      striation_mode ? eg::search_striation(g, budget) : eg::search_edge_graceful(g, budget);
  const char* status = "budget-exhausted";
  if (outcome.status == eg::SearchOutcome::Status::found) status = "found";
  if (outcome.status == eg::SearchOutcome::Status::none_exists) status = "none-exists";
  std::cerr << status << " nodes=" << outcome.nodes_explored << '\n';
  if (!outcome.found()) return 1;
  emit(out_path, striation_mode ? eg::striation_to_string(*outcome.striation)
                                : eg::labeling_to_string(*outcome.labeling));
  return 0;
}

int run_sweep(const std::string& family_spec, const std::vector<int>& k_values,
              const eg::SearchBudget& budget, const std::string& out_path) {
  if (k_values.empty()) throw eg::ConfigError("sweep needs at least one --k value");
  const std::vector<eg::FamilyMember> family = eg::parse_family(family_spec);
  const std::vector<eg::SweepRow> rows = eg::conjecture_sweep(family, k_values, budget);
  emit(out_path, eg::render_sweep_table(rows));
  return 0;
}

void add_budget_flags(CLI::App* cmd, eg::SearchBudget& budget, bool& exhaustive) {
  CLI::Option* mn = cmd->add_option("--max-nodes", budget.max_nodes,
                                    "search node limit (default 1000000)");
  CLI::Option* ex = cmd->add_flag("--exhaustive", exhaustive,
                                  "ignore the node limit, guarantee completeness");
  mn->excludes(ex);
  ex->excludes(mn);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-graceful labelings of disjoint unions of regular graphs"};
  app.require_subcommand(1);

  int rc = 0;

  // gen
  CLI::App* gen = app.add_subcommand("gen", "generate a graph file");
  gen->require_subcommand(1);
  struct {
    int n = 0, k = 0;
    std::string g1, g2, out;
  } ga;

  CLI::App* gen_cycle = gen->add_subcommand("cycle", "cycle C_n");
  gen_cycle->add_option("--n", ga.n, "vertex count")->required();
  gen_cycle->add_option("-o,--out", ga.out, "output path (default stdout)");
  gen_cycle->callback([&] { emit(ga.out, eg::graph_to_string(eg::cycle(ga.n))); });

  CLI::App* gen_power = gen->add_subcommand("cycle-power", "cycle power C_n^k");
  gen_power->add_option("--n", ga.n, "vertex count")->required();
  gen_power->add_option("--k", ga.k, "power")->required();
  gen_power->add_option("-o,--out", ga.out, "output path (default stdout)");
  gen_power->callback([&] { emit(ga.out, eg::graph_to_string(eg::cycle_power(ga.n, ga.k))); });

  CLI::App* gen_product = gen->add_subcommand("product", "cartesian product of two graph files");
  gen_product->add_option("g1", ga.g1, "first graph file")->required();
  gen_product->add_option("g2", ga.g2, "second graph file")->required();
  gen_product->add_option("-o,--out", ga.out, "output path (default stdout)");
  gen_product->callback([&] {
    const eg::MultiGraph g1 = eg::read_graph_file(ga.g1);
    const eg::MultiGraph g2 = eg::read_graph_file(ga.g2);
    emit(ga.out, eg::graph_to_string(eg::cartesian_product(g1, g2)));
  });

  CLI::App* gen_union = gen->add_subcommand("union", "k disjoint copies of a graph file");
  gen_union->add_option("g", ga.g1, "graph file")->required();
  gen_union->add_option("--k", ga.k, "copy count")->required();
  gen_union->add_option("-o,--out", ga.out, "output path (default stdout)");
  gen_union->callback([&] {
    emit(ga.out, eg::graph_to_string(eg::disjoint_union(eg::read_graph_file(ga.g1), ga.k)));
  });

  // check
  struct {
    std::string graph;
    int k = 0;
  } ca;
  CLI::App* check = app.add_subcommand("check", "necessary-condition report for a graph");
  check->add_option("graph", ca.graph, "graph file")->required();
  check->add_option("--k", ca.k, "evaluate feasibility of k disjoint copies")
      ->check(CLI::PositiveNumber);
  check->callback([&] { rc = run_check(ca.graph, ca.k); });

  // verify
  struct {
    std::string graph, labels;
  } va;
  CLI::App* verify = app.add_subcommand("verify", "verify an edge labeling");
  verify->add_option("graph", va.graph, "graph file")->required();
  verify->add_option("labeling", va.labels, "labeling file")->required();
  verify->callback([&] { rc = run_verify(va.graph, va.labels); });

  struct {
    std::string graph, striation;
  } vsa;
  CLI::App* verify_striation = app.add_subcommand("verify-striation", "verify a striation");
  verify_striation->add_option("graph", vsa.graph, "graph file")->required();
  verify_striation->add_option("striation", vsa.striation, "striation file")->required();
  verify_striation->callback([&] { rc = run_verify_striation(vsa.graph, vsa.striation); });

  // lift
  struct {
    std::string graph, input, out_graph, out_labels;
    int k = 0;
  } la;
  CLI::App* lift = app.add_subcommand("lift", "label k disjoint copies from a base labeling");
  lift->require_subcommand(1);

  CLI::App* lift_t2 = lift->add_subcommand("theorem2", "shift lift from an edge-graceful base");
  lift_t2->add_option("--k", la.k, "copy count (odd)")->required();
  lift_t2->add_option("graph", la.graph, "graph file")->required();
  lift_t2->add_option("labeling", la.input, "base labeling file")->required();
  lift_t2->add_option("--out-graph", la.out_graph, "write the kG graph file here");
  lift_t2->add_option("--out-labels", la.out_labels, "write the lifted labeling here");
  lift_t2->callback(
      [&] { rc = run_lift(false, la.graph, la.input, la.k, la.out_graph, la.out_labels); });

  CLI::App* lift_st = lift->add_subcommand("striae", "stria-block lift from a striation");
  lift_st->add_option("--k", la.k, "copy count (odd)")->required();
  lift_st->add_option("graph", la.graph, "graph file")->required();
  lift_st->add_option("striation", la.input, "striation file")->required();
  lift_st->add_option("--out-graph", la.out_graph, "write the kG graph file here");
  lift_st->add_option("--out-labels", la.out_labels, "write the lifted labeling here");
  lift_st->callback(
      [&] { rc = run_lift(true, la.graph, la.input, la.k, la.out_graph, la.out_labels); });

  // search
  struct {
    std::string graph, out;
    eg::SearchBudget budget;
    bool exhaustive = false;
  } sa;
  CLI::App* search = app.add_subcommand("search", "backtracking search for witnesses");
  search->require_subcommand(1);

  CLI::App* search_graceful = search->add_subcommand("graceful", "find an edge-graceful labeling");
  search_graceful->add_option("graph", sa.graph, "graph file")->required();
  search_graceful->add_option("-o,--out", sa.out, "witness output path (default stdout)");
  add_budget_flags(search_graceful, sa.budget, sa.exhaustive);
  search_graceful->callback([&] {
    sa.budget.exhaustive = sa.exhaustive;
    rc = run_search(false, sa.graph, sa.budget, sa.out);
  });

  CLI::App* search_striation = search->add_subcommand("striation", "find a striation");
  search_striation->add_option("graph", sa.graph, "graph file")->required();
  search_striation->add_option("-o,--out", sa.out, "witness output path (default stdout)");
  add_budget_flags(search_striation, sa.budget, sa.exhaustive);
  search_striation->callback([&] {
    sa.budget.exhaustive = sa.exhaustive;
    rc = run_search(true, sa.graph, sa.budget, sa.out);
  });

  // sweep
  struct {
    std::string family, out;
    std::vector<int> k_values;
    eg::SearchBudget budget;
    bool exhaustive = false;
  } swa;
  CLI::App* sweep = app.add_subcommand("sweep", "method-by-method table over a graph family");
  sweep->add_option("--family", swa.family, "comma-separated family spec, e.g. C3,C5^2,K5")
      ->required();
  sweep->add_option("--k", swa.k_values, "copy counts, e.g. 3,5")->required()->delimiter(',');
  sweep->add_option("-o,--out", swa.out, "output path (default stdout)");
  add_budget_flags(sweep, swa.budget, swa.exhaustive);
  sweep->callback([&] {
    swa.budget.exhaustive = swa.exhaustive;
    rc = run_sweep(swa.family, swa.k_values, swa.budget, swa.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const eg::ConstructionCheckFailed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const eg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

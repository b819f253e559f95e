// Command-line front end: exact fusion of diagonal matrix elements,
// exchange-operator eigenvalues, connection-diagram classification and
// probing, and the Hecke-algebra analogues.  All output is deterministic;
// json mode carries a schema version and no timestamps.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "hookfusion/eigenvalues.hpp"
#include "hookfusion/json_io.hpp"

using namespace hookfusion;

namespace {

int degree_bound_default() {
  if (const char* env = std::getenv("HOOKFUSION_DEGREE_BOUND")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

struct GlobalOpts {
  std::string out = "pretty";
  int degree_bound = degree_bound_default();
  bool unsafe_large = false;
  int jobs = 1;

  int bound() const { return unsafe_large ? Perm::kMaxDegree : std::min(degree_bound, 8); }
};

// Runs independent jobs on a small pool; results are printed in job
// order, never completion order.
std::vector<std::string> run_jobs(const std::vector<std::function<std::string()>>& jobs,
                                  int width) {
  std::vector<std::string> results(jobs.size());
  if (width <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      results[i] = jobs[i]();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < width; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

json diagram_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

int cmd_fuse(const GlobalOpts& g, const std::string& shape_s, const std::string& tableau_s,
             const std::string& mode) {
  Partition shape = Partition::parse(shape_s);
  if (shape.n() > g.bound())
    throw BoundExceeded("degree " + std::to_string(shape.n()) + " over the bound; pass --unsafe-large");
  StandardTableau t = tableau_from_flag(shape, tableau_s);
  AlgebraElement<Rat> f = fuse(t, mode);
  if (g.out == "json") std::cout << element_to_json(f).dump(2) << "\n";
  else std::cout << pretty_element(f) << "\n";
  return 0;
}

int cmd_eigenvalue(const GlobalOpts& g, const std::string& lam_s, const std::string& mu_s,
                   const std::string& nu_s, const std::string& method) {
  Partition lam = Partition::parse(lam_s), mu = Partition::parse(mu_s),
            nu = Partition::parse(nu_s);
  EigenvalueResult r;
  if (method == "operator") {
    r = extract_eigenvalue(lam, mu, nu, g.bound());
  } else if (method == "formula") {
    bool found = false;
    for (const MixedHookSpec& spec : enumerate_mixed_hooks(lam, mu))
      if (spec.outcome() == nu) {
        r = mixed_hook_eigenvalue(spec);
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument(nu.str() + " is not of mixed hook type for these shapes");
  } else {
    throw CLI::ValidationError("--method must be operator or formula");
  }
  if (g.out == "json") {
    json num = json::array(), den = json::array();
    for (const Rat& x : r.num_roots()) num.push_back(x.str());
    for (const Rat& x : r.den_roots()) den.push_back(x.str());
    json j = {{"schema", kSchemaVersion},
              {"eigenvalue", r.factored()},
              {"num_roots", num},
              {"den_roots", den}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.factored() << "\n";
  }
  return 0;
}

int cmd_ribbon_check(const GlobalOpts& g, const std::string& path) {
  ConnectionDiagram d = diagram_from_json(diagram_from_file(path));
  Verdict v = validity_check(d);
  if (g.out == "json") {
    json j = {{"schema", kSchemaVersion}, {"valid", v.valid}};
    if (!v.valid) j["reason"] = v.reason;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (v.valid ? "valid" : "invalid: " + v.reason) << "\n";
  }
  return 0;
}

int cmd_ribbon_probe(const GlobalOpts& g, const std::string& path, const std::string& target_s) {
  ConnectionDiagram d = diagram_from_json(diagram_from_file(path));
  Perm target = Perm::parse_cycles(target_s, d.tableau().n());
  ProbeResult r = probe_limit(d, target);
  if (g.out == "json") {
    json j = {{"schema", kSchemaVersion}, {"regular", r.regular()}};
    if (r.regular()) j["value"] = r.value->str();
    else j["pole"] = r.pole->str();
    std::cout << j.dump(2) << "\n";
  } else if (r.regular()) {
    std::cout << "coefficient of " << target.cycles_str() << " tends to " << r.value->str()
              << "\n";
  } else {
    std::cout << r.pole->str() << "\n";
  }
  return 0;
}

int cmd_ribbon_sweep(const GlobalOpts& g, const std::string& shape_s) {
  Partition shape = Partition::parse(shape_s);
  if (shape.n() > g.bound())
    throw BoundExceeded("degree over the bound; pass --unsafe-large");
  const StandardTableau t = column_tableau(shape);
  const auto edges = ConnectionDiagram::all_edges(shape);
  if (edges.size() > 20) throw BoundExceeded("too many edges to sweep");
  std::vector<std::function<std::string()>> jobs;
  for (uint32_t mask = 0; mask < (uint32_t{1} << edges.size()); ++mask) {
    jobs.push_back([&, mask]() -> std::string {
      ConnectionDiagram d(t);
      for (size_t i = 0; i < edges.size(); ++i)
        if (mask & (uint32_t{1} << i)) d.add_edge(edges[i].first, edges[i].second);
      Verdict v = validity_check(d);
      FullLimitResult res = full_limit(d);
      json row = {{"edges", diagram_to_json(d)["edges"]},
                  {"valid", v.valid},
                  {"regular", res.outcome.regular()}};
      if (res.outcome.regular()) row["matches_element"] = res.matches_oracle;
      if (!v.valid) row["reason"] = v.reason;
      return row.dump();
    });
  }
  std::vector<std::string> rows = run_jobs(jobs, g.jobs);
  bool conjecture_holds = true;
  for (const std::string& row_s : rows) {
    json row = json::parse(row_s);
    const bool agrees = row["valid"] == row["regular"] &&
                        (row["regular"] != true || row["matches_element"] == true);
    conjecture_holds &= agrees;
    if (g.out == "json") {
      std::cout << row_s << "\n";
    } else {
      std::string line = row["valid"] == true ? "valid  " : "invalid";
      line += row["regular"] == true
                  ? (std::string("  limit ok") +
                     (row["matches_element"] == true ? " (matches)" : " (DIFFERS)"))
                  : "  pole";
      line += "  edges=" + row["edges"].dump();
      std::cout << line << "\n";
    }
  }
  return conjecture_holds ? 0 : 1;
}

int cmd_hecke_fuse(const GlobalOpts& g, const std::string& shape_s, const std::string& tableau_s,
                   const std::string& mode, bool at_q_one) {
  Partition shape = Partition::parse(shape_s);
  StandardTableau t = tableau_from_flag(shape, tableau_s);
  HeckeElt<QRat> f = hecke_big_f(t, mode, std::min(g.bound(), 6));
  if (at_q_one) {
    AlgebraElement<Rat> e = q_one_specialize(f);
    std::cout << (g.out == "json" ? element_to_json(e).dump(2) : pretty_element(e)) << "\n";
  } else {
    std::cout << (g.out == "json" ? hecke_to_json(f).dump(2) : pretty_hecke(f)) << "\n";
  }
  return 0;
}

int cmd_hecke_g(const GlobalOpts& g, const std::string& shape_s, const std::string& tableau_s,
                bool at_q_one) {
  Partition shape = Partition::parse(shape_s);
  StandardTableau t = tableau_from_flag(shape, tableau_s);
  HeckeElt<QRat> e = g_element(t, std::min(g.bound(), 5));
  if (at_q_one) {
    AlgebraElement<Rat> s = q_one_specialize(e);
    std::cout << (g.out == "json" ? element_to_json(s).dump(2) : pretty_element(s)) << "\n";
  } else {
    std::cout << (g.out == "json" ? hecke_to_json(e).dump(2) : pretty_hecke(e)) << "\n";
  }
  return 0;
}

int cmd_char(const GlobalOpts& g, const std::string& lam_s, const std::string& type_s) {
  Partition lam = Partition::parse(lam_s);
  if (!type_s.empty()) {
    long v = mn_character(lam, Partition::parse(type_s));
    if (g.out == "json")
      std::cout << json{{"schema", kSchemaVersion}, {"value", v}}.dump(2) << "\n";
    else
      std::cout << v << "\n";
    return 0;
  }
  json rows = json::array();
  for (const Partition& type : partitions_of(lam.n())) {
    long v = mn_character(lam, type);
    if (g.out == "json")
      rows.push_back({{"cycle_type", type.parts()}, {"value", v}});
    else
      std::cout << type.str() << ": " << v << "\n";
  }
  if (g.out == "json")
    std::cout << json{{"schema", kSchemaVersion}, {"character", rows}}.dump(2) << "\n";
  return 0;
}

// A fixed battery of reproduction checks; --level full adds the long
// operator computations.  One row per check, exit 1 on any failure.
int cmd_verify(const GlobalOpts& g, const std::string& level) {
  struct Check {
    std::string name;
    std::function<bool()> run;
  };
  std::vector<Check> checks;

  checks.push_back({"fuse 2,1 column hook: the six-term element", [] {
    StandardTableau t = column_tableau(Partition({2, 1}));
    AlgebraElement<Rat> f = fuse(t, "hook");
    if (f != dme_any(t)) return false;
    return f.identity_coeff() == Rat(1) &&
           f.coeff(Perm::parse_cycles("(1,2)", 3)) == Rat(-1) &&
           f.coeff(Perm::parse_cycles("(1,3)", 3)) == Rat(1, 2) &&
           f.coeff(Perm::parse_cycles("(2,3)", 3)) == Rat(1, 2) &&
           f.coeff(Perm::parse_cycles("(1,2,3)", 3)) == Rat(-1, 2) &&
           f.coeff(Perm::parse_cycles("(1,3,2)", 3)) == Rat(-1, 2) && f.size() == 6;
  }});
  checks.push_back({"fuse 2,2 column: all three modes match recurrence", [] {
    StandardTableau t = column_tableau(Partition({2, 2}));
    AlgebraElement<Rat> f = dme_any(t);
    if (f.coeff(Perm::parse_cycles("(1,2)(3,4)", 4)) != Rat(1)) return false;
    if (f.coeff(Perm::parse_cycles("(1,2,3,4)", 4)) != Rat(1, 2)) return false;
    return fuse(t, "hook") == f && fuse(t, "row") == f && fuse(t, "column") == f;
  }});
  checks.push_back({"hook tableau and contents of 3,3,2", [] {
    StandardTableau t = hook_tableau(Partition({3, 3, 2}));
    return t.str() == "[[1,4,5],[2,6,8],[3,7]]" &&
           t.contents() == std::vector<int>{0, -1, -2, 1, 2, 0, -1, 1};
  }});
  checks.push_back({"seven eigenvalue pairs of (3,1) x (2,2), formula route", [] {
    const Partition lam({3, 1}), mu({2, 2});
    auto lin = [](std::initializer_list<long> nr, std::initializer_list<long> dr) {
      UniPoly<Rat> n(1), d(1);
      for (long r : nr) n = n * UniPoly<Rat>::linear(Rat(-r), Rat(1));
      for (long r : dr) d = d * UniPoly<Rat>::linear(Rat(-r), Rat(1));
      return QT(n, d);
    };
    const std::vector<std::tuple<Partition, QT, QT>> table = {
        {Partition({5, 3}), lin({3, 2}, {-1, -2}), lin({-3, -4}, {1, 0})},
        {Partition({5, 2, 1}), lin({3}, {-2}), lin({2, -3, -4}, {1, 0, -1})},
        {Partition({4, 3, 1}), lin({3, -4}, {-1, -2}), lin({2, -3}, {1, 0})},
        {Partition({4, 2, 1, 1}), lin({-4}, {-2}), lin({3, 2, -3}, {1, 0, -1})},
        {Partition({3, 3, 2}), lin({3, -3, -4}, {1, -1, -2}), lin({2}, {0})},
        {Partition({3, 2, 2, 1}), lin({-3, -4}, {1, -2}), lin({3, 2}, {0, -1})},
    };
    for (const auto& [nu, want_r, want_rp] : table) {
      if (resolve_eigenvalue(lam, mu, nu, false).r != want_r) return false;
      if (resolve_eigenvalue(mu, lam, nu, false).r.negate_variable() != want_rp)
        return false;
    }
    return true;
  }});
  checks.push_back({"row and hook decompositions of 3,3,2", [] {
    const auto rows = row_product_decomposition(Partition({3, 3, 2}));
    if (rows.at(Partition({5, 3})) != 3 || rows.at(Partition({4, 3, 1})) != 2 ||
        rows.at(Partition({6, 2})) != 3 || rows.at(Partition({8})) != 1)
      return false;
    const auto hooks = hook_product_decomposition(Partition({3, 3, 2}));
    return hooks.at(Partition({4, 2, 1, 1})) == 2 && hooks.at(Partition({3, 3, 2})) == 1 &&
           hooks.size() == 10;
  }});
  checks.push_back({"triple agreement over all tableaux, n <= 4", [] {
    for (int n = 1; n <= 4; ++n)
      for (const Partition& p : partitions_of(n))
        for (const StandardTableau& t : all_standard_tableaux(p)) {
          AlgebraElement<Rat> f = dme_any(t);
          if (fuse(t, "hook") != f || fuse(t, "row") != f || fuse(t, "column") != f)
            return false;
        }
    return true;
  }});
  checks.push_back({"eigenvalue formulas match operator, sizes <= 5", [] {
    for (const auto& [lam, mu] : std::vector<std::pair<Partition, Partition>>{
             {Partition({2}), Partition({2})}, {Partition({2, 1}), Partition({2})}}) {
      for (const MixedHookSpec& spec : enumerate_mixed_hooks(lam, mu)) {
        const Partition nu = spec.outcome();
        if (lr_coefficient(nu, lam, mu) != 1) continue;
        if (!(mixed_hook_eigenvalue(spec).r == extract_eigenvalue(lam, mu, nu).r))
          return false;
      }
    }
    return true;
  }});
  checks.push_back({"zero/pole set of (3,1) x (2,2)", [] {
    return zero_pole_set(Partition({3, 1}), Partition({2, 2})) ==
           std::set<long>{-4, -3, -1, 1, 2, 3};
  }});
  checks.push_back({"appendix probes on (3,3), coefficient of (1,4,3,6)", [] {
    const Perm target = Perm::parse_cycles("(1,4,3,6)", 6);
    ConnectionDiagram rows(column_tableau(Partition({3, 3})));
    rows.add_edge(Box{1, 1}, Box{1, 2});
    rows.add_edge(Box{1, 2}, Box{1, 3});
    rows.add_edge(Box{2, 1}, Box{2, 2});
    rows.add_edge(Box{2, 2}, Box{2, 3});
    ProbeResult ok = probe_limit(rows, target);
    if (!ok.regular() || *ok.value != Rat(-1, 4)) return false;
    ConnectionDiagram bad(column_tableau(Partition({3, 3})));
    bad.add_edge(Box{1, 1}, Box{1, 2});
    bad.add_edge(Box{2, 1}, Box{2, 2});
    return !probe_limit(bad, target).regular();
  }});
  checks.push_back({"diagram sweep of 2,2", [] {
    const auto edges = ConnectionDiagram::all_edges(Partition({2, 2}));
    for (int mask = 0; mask < 16; ++mask) {
      ConnectionDiagram d(column_tableau(Partition({2, 2})));
      for (size_t i = 0; i < edges.size(); ++i)
        if (mask & (1 << i)) d.add_edge(edges[i].first, edges[i].second);
      FullLimitResult res = full_limit(d);
      if (validity_check(d).valid != res.outcome.regular()) return false;
      if (res.outcome.regular() && !res.matches_oracle) return false;
    }
    return true;
  }});
  checks.push_back({"hecke fused element of 2,1 at q=1", [] {
    StandardTableau t = column_tableau(Partition({2, 1}));
    return q_one_specialize(hecke_big_f(t, "hook")) ==
           dme_any(t).right_mul(longest_element(3));
  }});
  checks.push_back({"hecke laws for every tableau, n <= 3", [] {
    for (int n = 1; n <= 3; ++n)
      for (const Partition& p : partitions_of(n))
        for (const StandardTableau& t : all_standard_tableaux(p))
          if (!hecke_checks(t).ok || !t_action_table_check(t).ok) return false;
    return true;
  }});
  checks.push_back({"counting oracles: K, D and characters", [] {
    if (kostka(Partition({5, 3}), {3, 3, 2}) != 3) return false;
    if (hook_product_decomposition(Partition({3, 3, 2})).at(Partition({4, 2, 1, 1})) != 2)
      return false;
    for (int n = 1; n <= 5; ++n)
      for (const Partition& p : partitions_of(n))
        if (hook_product_decomposition(p).at(p) != 1) return false;
    return mn_character(Partition({2, 1}), Partition({3})) == -1;
  }});
  if (level == "full") {
    checks.push_back({"operator eigenvalues in S_8 (six constituents)", [] {
      const std::vector<std::tuple<Partition, Partition, Partition, std::string>> table = {
          {Partition({3, 1}), Partition({3, 1}), Partition({5, 3}), "(u-4)(u-1)/((u)(u+1))"},
          {Partition({3, 1}), Partition({2, 2}), Partition({4, 2, 2}), "(u-3)(u+4)/((u-1)(u+2))"},
          {Partition({2, 2}), Partition({2, 2}), Partition({4, 3, 1}), "(u-3)(u-2)(u+2)/((u)(u)(u+1))"},
          {Partition({2, 2}), Partition({2, 2}), Partition({3, 2, 2, 1}), "(u-2)(u+2)(u+3)/((u-1)(u)(u))"},
          {Partition({2, 2}), Partition({2, 1, 1}), Partition({3, 3, 1, 1}), "(u-2)(u+3)/((u)(u+1))"},
          {Partition({2, 1, 1}), Partition({2, 1, 1}), Partition({2, 2, 2, 1, 1}), "(u+1)(u+4)/((u-1)(u))"},
      };
      for (const auto& [lam, mu, nu, want] : table)
        if (extract_eigenvalue(lam, mu, nu).factored() != want) return false;
      return true;
    }});
    checks.push_back({"diagram sweep of 3,3", [] {
      const auto edges = ConnectionDiagram::all_edges(Partition({3, 3}));
      for (int mask = 0; mask < (1 << 7); ++mask) {
        ConnectionDiagram d(column_tableau(Partition({3, 3})));
        for (size_t i = 0; i < edges.size(); ++i)
          if (mask & (1 << i)) d.add_edge(edges[i].first, edges[i].second);
        FullLimitResult res = full_limit(d);
        if (validity_check(d).valid != res.outcome.regular()) return false;
        if (res.outcome.regular() && !res.matches_oracle) return false;
      }
      return true;
    }});
  }

  std::vector<std::function<std::string()>> jobs;
  for (const Check& c : checks)
    jobs.push_back([&c]() -> std::string {
      bool ok = false;
      std::string note;
      try {
        ok = c.run();
      } catch (const std::exception& ex) {
        note = std::string("  [") + ex.what() + "]";
      }
      return std::string(ok ? "PASS  " : "FAIL  ") + c.name + note;
    });
  std::vector<std::string> rows = run_jobs(jobs, g.jobs);
  bool all_ok = true;
  for (const std::string& row : rows) {
    std::cout << row << "\n";
    if (row.compare(0, 4, "PASS") != 0) all_ok = false;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hook-fusion computations in symmetric group and Hecke algebras"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--out", g.out, "output format: json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--degree-bound", g.degree_bound,
                 "largest symmetric group degree to allow (env HOOKFUSION_DEGREE_BOUND)");
  app.add_flag("--unsafe-large", g.unsafe_large, "lift the degree bound");
  app.add_option("--jobs", g.jobs, "worker pool width for independent jobs");

  std::string shape, tableau = "column", mode = "hook";
  std::string lam, mu, nu, method = "operator";
  std::string diagram_path, target, type_s, level = "quick";
  bool at_q_one = false;

  CLI::App* fuse_cmd = app.add_subcommand("fuse", "fuse a diagonal matrix element");
  fuse_cmd->add_option("--shape", shape)->required();
  fuse_cmd->add_option("--tableau", tableau, "hook|row|column|explicit rows");
  fuse_cmd->add_option("--mode", mode, "hook|row|column");

  CLI::App* eig_cmd = app.add_subcommand("eigenvalue", "exchange-operator eigenvalue");
  eig_cmd->add_option("--lambda", lam)->required();
  eig_cmd->add_option("--mu", mu)->required();
  eig_cmd->add_option("--nu", nu)->required();
  eig_cmd->add_option("--method", method, "operator|formula");

  CLI::App* ribbon_cmd = app.add_subcommand("ribbon", "connection diagram tools");
  ribbon_cmd->require_subcommand(1);
  CLI::App* check_cmd = ribbon_cmd->add_subcommand("check", "classify a diagram");
  check_cmd->add_option("--diagram", diagram_path)->required();
  CLI::App* probe_cmd = ribbon_cmd->add_subcommand("probe", "limit of one coefficient");
  probe_cmd->add_option("--diagram", diagram_path)->required();
  probe_cmd->add_option("--target", target)->required();
  CLI::App* sweep_cmd = ribbon_cmd->add_subcommand("sweep", "all edge subsets of a shape");
  sweep_cmd->add_option("--shape", shape)->required();

  CLI::App* hecke_cmd = app.add_subcommand("hecke", "Hecke algebra analogues");
  hecke_cmd->require_subcommand(1);
  CLI::App* hfuse_cmd = hecke_cmd->add_subcommand("fuse", "fused Hecke element");
  hfuse_cmd->add_option("--shape", shape)->required();
  hfuse_cmd->add_option("--tableau", tableau);
  hfuse_cmd->add_option("--mode", mode);
  hfuse_cmd->add_flag("--at-q-one", at_q_one);
  CLI::App* hg_cmd = hecke_cmd->add_subcommand("g", "seminormal basis element");
  hg_cmd->add_option("--shape", shape)->required();
  hg_cmd->add_option("--tableau", tableau)->required();
  hg_cmd->add_flag("--at-q-one", at_q_one);

  CLI::App* char_cmd = app.add_subcommand("char", "symmetric group characters");
  char_cmd->add_option("--lambda", lam)->required();
  char_cmd->add_option("--cycle-type", type_s);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the reproduction checks");
  verify_cmd->add_option("--level", level, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(fuse_cmd)) return cmd_fuse(g, shape, tableau, mode);
    if (app.got_subcommand(eig_cmd)) return cmd_eigenvalue(g, lam, mu, nu, method);
    if (app.got_subcommand(ribbon_cmd)) {
      if (ribbon_cmd->got_subcommand(check_cmd)) return cmd_ribbon_check(g, diagram_path);
      if (ribbon_cmd->got_subcommand(probe_cmd))
        return cmd_ribbon_probe(g, diagram_path, target);
      return cmd_ribbon_sweep(g, shape);
    }
    if (app.got_subcommand(hecke_cmd)) {
      if (hecke_cmd->got_subcommand(hfuse_cmd))
        return cmd_hecke_fuse(g, shape, tableau, mode, at_q_one);
      return cmd_hecke_g(g, shape, tableau, at_q_one);
    }
    if (app.got_subcommand(char_cmd)) return cmd_char(g, lam, type_s);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(g, level);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

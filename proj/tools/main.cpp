#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cg/analysis.hpp"
#include "cg/game.hpp"
#include "cg/graph.hpp"
#include "cg/harness.hpp"
#include "cg/minimax.hpp"
#include "cg/monitor.hpp"
#include "cg/orientation.hpp"
#include "cg/strategy.hpp"
#include "cg/transcript.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

cg::Graph load_graph(const std::string& path) {
  return cg::Graph::parse_edge_list(slurp(path));
}

std::pair<int, int> parse_mb(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
    throw std::invalid_argument("--mb wants the form M:B");
  int m = 0, b = 0;
  try {
    std::size_t used = 0;
    m = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
    b = std::stoi(s.substr(colon + 1), &used);
    if (used != s.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("--mb wants the form M:B with integers");
  }
  if (m < 1 || b < 1) throw std::invalid_argument("--mb wants M >= 1 and B >= 1");
  return {m, b};
}

cg::Player first_of(const std::string& s) {
  auto p = cg::parse_player(s);
  if (!p) throw std::invalid_argument("--first wants maker or breaker");
  return *p;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

bool connected(const cg::Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& nb : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(nb.vertex)]) {
        seen[static_cast<std::size_t>(nb.vertex)] = true;
        ++cnt;
        q.push(nb.vertex);
      }
  }
  return cnt == g.vertex_count();
}

struct MonitorSet {
  std::vector<std::unique_ptr<cg::Monitor>> owned;
  std::vector<cg::Monitor*> ptrs;
  bool structural = false;  // any monitor that needs an oriented game

  void add(std::unique_ptr<cg::Monitor> m) {
    ptrs.push_back(m.get());
    owned.push_back(std::move(m));
  }
};

MonitorSet build_monitors(const std::string& list, const cg::Graph& g, int b) {
  MonitorSet set;
  if (list.empty() || list == "none") return set;
  int d = g.max_degree();
  bool regular = g.min_degree() == d;
  for (const std::string& tok : list == "all"
                                    ? std::vector<std::string>{"free-edge-budget", "directed-tree",
                                                               "out-arc-height", "width"}
                                    : split_list(list)) {
    if (tok == "free-edge-budget") {
      if (!regular) throw std::invalid_argument("free-edge-budget monitor needs a regular graph");
      set.add(cg::free_edge_budget_monitor(d, b));
    } else if (tok == "directed-tree") {
      set.add(cg::directed_tree_monitor());
      set.structural = true;
    } else if (tok == "out-arc-height") {
      set.add(cg::out_arc_height_monitor());
      set.structural = true;
    } else if (tok == "width") {
      if (!regular) throw std::invalid_argument("width monitor needs a regular graph");
      set.add(cg::width_monitor(d));
      set.structural = true;
    } else {
      throw std::invalid_argument("unknown monitor: " + tok);
    }
  }
  return set;
}

// ---- subcommand bodies ----

int cmd_gen(int n, int d, std::uint64_t seed, const std::string& out) {
  cg::Graph g = cg::random_regular(n, d, seed);
  std::string text = g.to_edge_list();
  if (out.empty())
    std::cout << text;
  else
    spit(out, text);
  return 0;
}

int cmd_analyze(const std::string& in, int psi_k) {
  cg::Graph g = load_graph(in);
  std::cout << "n " << g.vertex_count() << "\n";
  std::cout << "m_edges " << g.edge_count() << "\n";
  std::cout << "min_degree " << g.min_degree() << "\n";
  std::cout << "max_degree " << g.max_degree() << "\n";
  std::cout << "regular " << (g.min_degree() == g.max_degree() ? 1 : 0) << "\n";
  std::cout << "connected " << (connected(g) ? 1 : 0) << "\n";
  auto gr = cg::girth(g);
  std::cout << "girth " << (gr ? std::to_string(*gr) : std::string("none")) << "\n";
  std::cout << "degeneracy " << cg::degeneracy_order(g).degeneracy << "\n";
  std::cout << "dsatur_colors " << cg::dsatur_coloring(g).num_colors << "\n";
  std::cout << "hash " << g.canonical_hash_hex() << "\n";
  if (psi_k > 0) {
    auto prof = cg::isoperimetric_profile(g, psi_k);
    for (int k = 1; k <= prof.kmax(); ++k)
      std::cout << "psi[" << k << "] " << prof.at(k).str() << "\n";
  }
  return 0;
}

int cmd_orient(const std::string& in, const std::string& out, const std::string& cert_path) {
  cg::Graph g = load_graph(in);
  auto [o, cert] = cg::short_orientation(g);
  if (out.empty())
    std::cout << o.to_file();
  else
    spit(out, o.to_file());
  if (!cert_path.empty()) spit(cert_path, cert.to_json());
  std::cerr << "k " << cert.k << " gamma_delta " << cert.gamma_delta << " gamma_k " << cert.gamma_k
            << " chi_ub " << cert.chi_ub << " certified_bound " << cert.certified_bound << "\n";
  return 0;
}

int cmd_oracle(const std::string& in, const std::string& mb, const std::string& first,
               int target) {
  cg::Graph g = load_graph(in);
  auto [m, b] = parse_mb(mb);
  cg::GameConfig cfg;
  cfg.m = m;
  cfg.b = b;
  cfg.first = first_of(first);
  cg::Player w = cg::minimax_solve(g, cfg, target);
  std::cout << cg::player_display(w) << "\n";
  return 0;
}

int cmd_play(const std::string& in, const std::string& orientation_path, const std::string& mb,
             const std::string& first, const std::string& maker, const std::string& breaker,
             const std::string& monitors, std::uint64_t seed, int target, const std::string& out,
             const std::string& replay_path) {
  cg::Graph g = load_graph(in);

  if (!replay_path.empty()) {
    cg::Transcript t = cg::Transcript::parse_jsonl(slurp(replay_path));
    cg::ReplayResult rr = cg::replay(g, t);
    bool ok = rr.outcome.max_component == t.outcome.max_component &&
              rr.outcome.rounds == t.outcome.rounds &&
              rr.outcome.forfeited == t.outcome.forfeited;
    std::cout << "replayed max_component=" << rr.outcome.max_component
              << " rounds=" << rr.outcome.rounds << " forfeited=" << rr.outcome.forfeited
              << (ok ? " (matches transcript)" : " (MISMATCH with transcript trailer)") << "\n";
    return ok ? 0 : 1;
  }

  auto [m, b] = parse_mb(mb);
  MonitorSet mons = build_monitors(monitors, g, b);
  bool oriented = mons.structural || breaker.compare(0, 6, "global") == 0;

  std::optional<cg::Orientation> o;
  if (oriented) {
    if (!orientation_path.empty()) {
      o = cg::Orientation::parse_file(slurp(orientation_path));
      if (!o->matches(g))
        throw std::invalid_argument("orientation file does not match the graph");
    } else {
      o = cg::short_orientation(g).first;
    }
  }

  cg::GameConfig cfg;
  cfg.m = m;
  cfg.b = b;
  cfg.first = first_of(first);
  cfg.seed = seed;
  if (target > 0) cfg.target_s = target;

  auto mk = cg::strategy_from_name(maker, cg::Player::Maker, seed, nullptr);
  auto bk = cg::strategy_from_name(breaker, cg::Player::Breaker, seed, o ? &*o : nullptr);

  cg::GameState st = o ? cg::GameState(g, cfg, *o) : cg::GameState(g, cfg);
  cg::Transcript t = cg::play_recorded(st, *mk, *bk, mons.ptrs);
  if (out.empty())
    std::cout << t.to_jsonl();
  else
    spit(out, t.to_jsonl());
  std::cerr << "max_component=" << t.outcome.max_component << " rounds=" << t.outcome.rounds
            << " forfeited=" << t.outcome.forfeited << "\n";
  return 0;
}

int cmd_sweep(int n, int d, int m, const std::vector<int>& biases, std::uint64_t seed_base,
              int seed_count, const std::string& maker, const std::string& breaker,
              const std::string& first, const std::string& csv, int jobs) {
  cg::SweepConfig cfg;
  cfg.n = n;
  cfg.d = d;
  cfg.m = m;
  cfg.biases = biases;
  cfg.seeds = cg::seed_range(seed_base, seed_count);
  cfg.maker = maker;
  cfg.breaker = breaker;
  cfg.first = first_of(first);
  cfg.jobs = jobs;
  auto rows = cg::bias_sweep(cfg);
  std::string text = cg::to_csv(rows);
  if (csv.empty())
    std::cout << text;
  else {
    spit(csv, text);
    std::cerr << "wrote " << rows.size() << " rows to " << csv << "\n";
  }
  return 0;
}

int cmd_scale(int d, const std::vector<int>& ns, std::uint64_t seed_base, int seed_count,
              const std::string& makers, const std::string& csv, int jobs) {
  cg::ScaleConfig cfg;
  cfg.d = d;
  cfg.ns = ns;
  cfg.seeds = cg::seed_range(seed_base, seed_count);
  cfg.makers = split_list(makers);
  cfg.jobs = jobs;
  cg::ScaleResult res = cg::scaling_experiment(cfg);

  std::vector<cg::SweepRow> all = res.breaker_rows;
  all.insert(all.end(), res.maker_rows.begin(), res.maker_rows.end());
  std::string text = cg::to_csv(all);
  if (csv.empty())
    std::cout << text;
  else {
    spit(csv, text);
    std::cerr << "wrote " << all.size() << " rows to " << csv << "\n";
  }

  int failures = 0;
  for (const auto& rep : res.reports)
    if (!rep.pass) {
      ++failures;
      std::cerr << "FAIL " << rep.bound_name << " n=" << rep.n << " b=" << rep.b
                << " observed=" << rep.observed_value << " bound=" << rep.bound_value << "\n";
    }
  std::cerr << "bound reports: " << res.reports.size() - failures << "/" << res.reports.size()
            << " within bound\n";
  if (res.maker_track_skipped)
    std::cerr << "maker track skipped (d=3 would need Breaker bias 0)\n";
  for (auto [nn, frac] : res.maker_median_fraction)
    std::cerr << "maker track n=" << nn << " median max_component/n = " << frac << "\n";
  return failures == 0 ? 0 : 1;
}

// ---- verify: file mode and suite mode ----

int cmd_verify_files(const std::string& gpath, const std::string& opath,
                     const std::string& certpath) {
  cg::Graph g = load_graph(gpath);
  cg::Orientation o = cg::Orientation::parse_file(slurp(opath));
  cg::OrientationCertificate cert = cg::OrientationCertificate::from_json(slurp(certpath));
  cg::VerificationReport report = cg::verify_orientation(g, o, cert);
  std::cout << report.to_string();
  return report.all_passed() ? 0 : 1;
}

class PassBreaker final : public cg::Strategy {
 public:
  std::string name() const override { return "pass"; }
  cg::Player side() const override { return cg::Player::Breaker; }
  std::optional<int> choose_step(cg::GameState&) override { return std::nullopt; }
};

cg::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return cg::Graph::from_edges(n, std::move(e));
}

cg::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return cg::Graph::from_edges(n, std::move(e));
}

cg::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return cg::Graph::from_edges(n, std::move(e));
}

using CheckFn = std::function<std::optional<std::string>()>;

std::optional<std::string> check_bias_monotonicity() {
  struct Board {
    const char* name;
    cg::Graph g;
  };
  std::vector<Board> boards;
  boards.push_back({"K3", complete_graph(3)});
  boards.push_back({"K4", complete_graph(4)});
  boards.push_back({"C5", cycle_graph(5)});
  boards.push_back({"P4", path_graph(4)});
  for (const auto& bd : boards) {
    int n = bd.g.vertex_count();
    for (int s = 2; s <= n; ++s)
      for (cg::Player first : {cg::Player::Maker, cg::Player::Breaker}) {
        auto win = [&](int m, int b) {
          cg::GameConfig cfg;
          cfg.m = m;
          cfg.b = b;
          cfg.first = first;
          return cg::minimax_solve(bd.g, cfg, s) == cg::Player::Maker;
        };
        for (int m = 1; m <= 2; ++m)
          for (int b = 1; b <= 3; ++b) {
            if (!win(m, b)) continue;
            if (!win(m + 1, b))
              return std::string(bd.name) + ": Maker wins (" + std::to_string(m) + ":" +
                     std::to_string(b) + ") s=" + std::to_string(s) + " but not with m+1";
            if (b > 1 && !win(m, b - 1))
              return std::string(bd.name) + ": Maker wins (" + std::to_string(m) + ":" +
                     std::to_string(b) + ") s=" + std::to_string(s) + " but not with b-1";
          }
      }
    // first-player advantage
    for (int s = 2; s <= n; ++s)
      for (int b = 1; b <= 3; ++b) {
        cg::GameConfig cfg;
        cfg.b = b;
        cfg.first = cg::Player::Breaker;
        if (cg::minimax_solve(bd.g, cfg, s) != cg::Player::Maker) continue;
        cfg.first = cg::Player::Maker;
        if (cg::minimax_solve(bd.g, cfg, s) != cg::Player::Maker)
          return std::string(bd.name) + ": Maker wins second but not first, s=" +
                 std::to_string(s) + " b=" + std::to_string(b);
      }
  }
  return std::nullopt;
}

std::optional<std::string> check_reactive_isolation() {
  cg::Graph k4 = complete_graph(4);
  cg::GameConfig oracle_cfg;
  oracle_cfg.b = 4;
  oracle_cfg.first = cg::Player::Maker;
  if (cg::minimax_solve(k4, oracle_cfg, 3) != cg::Player::Breaker)
    return std::string("oracle disagrees: K4 (1:4) target 3 should be a Breaker win");
  for (const char* maker : {"tree", "random", "greedy-merge"})
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      cg::GameConfig cfg;
      cfg.b = 4;
      cfg.seed = seed;
      auto mk = cg::strategy_from_name(maker, cg::Player::Maker, seed, nullptr);
      auto bk = cg::breaker_reactive_greedy();
      cg::GameState st(k4, cfg);
      cg::PlayOutcome out = cg::play(st, *mk, *bk);
      if (out.max_component != 2)
        return std::string(maker) + " seed " + std::to_string(seed) + ": max component " +
               std::to_string(out.max_component) + ", expected exactly 2";
    }
  return std::nullopt;
}

std::optional<std::string> run_monitored_games(bool structural, cg::Strategy* inject) {
  int d = 4, n = 60;
  std::vector<int> biases = structural ? std::vector<int>{2} : std::vector<int>{2, 3, 4};
  for (int b : biases)
    for (const char* maker : {"tree", "random", "greedy-merge"})
      for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        cg::Graph g = cg::random_regular(n, d, seed);
        cg::GameConfig cfg;
        cfg.b = b;
        cfg.seed = seed;
        auto mk = cg::strategy_from_name(maker, cg::Player::Maker, seed, nullptr);
        std::vector<std::unique_ptr<cg::Monitor>> mons;
        std::vector<cg::Monitor*> ptrs;
        std::unique_ptr<cg::Strategy> bk;
        std::optional<std::pair<cg::Orientation, cg::OrientationCertificate>> oc;
        if (structural) {
          oc = cg::short_orientation(g);
          bk = cg::breaker_global(oc->first);
          mons.push_back(cg::directed_tree_monitor());
          mons.push_back(cg::out_arc_height_monitor());
          mons.push_back(cg::width_monitor(d));
        } else {
          bk = cg::breaker_reactive_greedy();
          mons.push_back(cg::free_edge_budget_monitor(d, b));
        }
        for (auto& mp : mons) ptrs.push_back(mp.get());
        cg::GameState st =
            structural ? cg::GameState(g, cfg, oc->first) : cg::GameState(g, cfg);
        cg::play(st, *mk, inject ? *inject : *bk, ptrs);
      }
  return std::nullopt;  // violations throw
}

std::optional<std::string> check_injected_fault() {
  PassBreaker lazy;
  try {
    run_monitored_games(false, &lazy);
  } catch (const cg::MonitorViolation& v) {
    return std::string("monitor fired as intended under a faulty Breaker: ") + v.what();
  }
  return std::string("monitor stayed silent under a faulty Breaker");
}

std::optional<std::string> check_orientation_suite(bool exact) {
  struct Case {
    int d, n;
    std::uint64_t seed;
  };
  std::vector<Case> cases = {{3, 40, 1}, {4, 40, 2}, {5, 40, 3}};
  if (!exact) cases.push_back({4, 200, 4});
  for (const auto& c : cases) {
    cg::Graph g = cg::random_regular(c.n, c.d, c.seed);
    auto [o, cert] = cg::short_orientation(g);
    if (exact) {
      int le = cg::longest_directed_path_exact(g, o);
      int ls = cg::longest_directed_path_structured(g, o, cert);
      if (le != ls)
        return "d=" + std::to_string(c.d) + " n=" + std::to_string(c.n) +
               ": exact longest path " + std::to_string(le) + " != structured " +
               std::to_string(ls);
    } else {
      auto report = cg::verify_orientation(g, o, cert);
      if (!report.all_passed())
        return "d=" + std::to_string(c.d) + " n=" + std::to_string(c.n) + ":\n" +
               report.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_complete_psi() {
  for (int n = 4; n <= 10; ++n) {
    cg::Graph g = complete_graph(n);
    auto prof = cg::isoperimetric_profile(g, n / 2);
    for (int k = 1; k <= prof.kmax(); ++k)
      if (prof.at(k) != cg::Rational(n - k, 1))
        return "K" + std::to_string(n) + " k=" + std::to_string(k) + ": got " +
               prof.at(k).str() + ", expected " + std::to_string(n - k);
  }
  return std::nullopt;
}

std::optional<std::string> check_round_formula() {
  struct Case {
    cg::Graph g;
    int b;
  };
  std::vector<Case> cases;
  cases.push_back({complete_graph(4), 1});
  cases.push_back({complete_graph(4), 2});
  cases.push_back({complete_graph(5), 3});
  cases.push_back({cycle_graph(6), 1});
  cases.push_back({cycle_graph(8), 3});
  cases.push_back({cg::random_regular(10, 3, 5), 2});
  for (const auto& c : cases) {
    int e = c.g.edge_count();
    int want = (e + c.b) / (c.b + 1);  // ceil(E / (b+1))
    cg::GameConfig cfg;
    cfg.b = c.b;
    cfg.seed = 9;
    auto mk = cg::maker_random(9);  // never forfeits
    auto bk = cg::breaker_reactive_greedy();
    cg::GameState st(c.g, cfg);
    cg::PlayOutcome out = cg::play(st, *mk, *bk);
    if (out.rounds != want)
      return "E=" + std::to_string(e) + " b=" + std::to_string(c.b) + ": " +
             std::to_string(out.rounds) + " rounds, expected " + std::to_string(want);
  }
  return std::nullopt;
}

int cmd_verify_suite(const std::string& scope, bool inject_fault) {
  std::vector<std::pair<std::string, CheckFn>> checks;
  bool all = scope == "all";
  if (all || scope == "oracle") {
    checks.emplace_back("oracle-bias-monotonicity", check_bias_monotonicity);
    checks.emplace_back("oracle-reactive-isolation", check_reactive_isolation);
  }
  if (all || scope == "monitors") {
    checks.emplace_back("monitors-free-edge-budget",
                        [] { return run_monitored_games(false, nullptr); });
    checks.emplace_back("monitors-structural", [] { return run_monitored_games(true, nullptr); });
    if (inject_fault) checks.emplace_back("monitors-injected-fault", check_injected_fault);
  }
  if (all || scope == "orientation") {
    checks.emplace_back("orientation-verify", [] { return check_orientation_suite(false); });
    checks.emplace_back("orientation-exact-match", [] { return check_orientation_suite(true); });
  }
  if (all || scope == "formulas") {
    checks.emplace_back("formulas-complete-psi", check_complete_psi);
    checks.emplace_back("formulas-round-count", check_round_formula);
  }
  if (checks.empty()) throw std::invalid_argument("unknown --scope: " + scope);

  int failures = 0;
  for (auto& [name, fn] : checks) {
    std::optional<std::string> err;
    try {
      err = fn();
    } catch (const std::exception& ex) {
      err = std::string(ex.what());
    }
    if (err) {
      ++failures;
      std::cout << "FAIL " << name << ": " << *err << "\n";
    } else {
      std::cout << "ok " << name << "\n";
    }
  }
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maker-Breaker component games on regular graphs"};
  app.require_subcommand(1);
  int rc = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random d-regular graph");
  int gen_n = 0, gen_d = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--d", gen_d, "degree")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--out", gen_out, "edge list output (stdout when omitted)");
  gen->callback([&] { rc = cmd_gen(gen_n, gen_d, gen_seed, gen_out); });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "structural report for a graph");
  std::string an_in;
  int an_psi = 0;
  analyze->add_option("-i,--in", an_in, "edge list input")->required();
  analyze->add_option("--psi", an_psi, "also print the exact expansion profile up to k");
  analyze->callback([&] { rc = cmd_analyze(an_in, an_psi); });

  // orient
  auto* orient = app.add_subcommand("orient", "orientation with positive out-degrees and short paths");
  std::string or_in, or_out, or_cert;
  orient->add_option("-i,--in", or_in, "edge list input")->required();
  orient->add_option("-o,--out", or_out, "orientation output (stdout when omitted)");
  orient->add_option("--cert", or_cert, "certificate JSON output");
  orient->callback([&] { rc = cmd_orient(or_in, or_out, or_cert); });

  // verify
  auto* verify = app.add_subcommand("verify", "verify an orientation or run a named check suite");
  std::string vf_in, vf_orient, vf_cert, vf_scope = "all";
  bool vf_fault = false;
  verify->add_option("-i,--in", vf_in, "edge list input (file mode)");
  verify->add_option("--orientation", vf_orient, "orientation file (file mode)");
  verify->add_option("--cert", vf_cert, "certificate JSON (file mode)");
  verify->add_option("--scope", vf_scope, "oracle|monitors|orientation|formulas|all (suite mode)");
  verify->add_flag("--inject-fault", vf_fault, "run the negative control (suite mode)");
  verify->callback([&] {
    if (!vf_orient.empty() || !vf_cert.empty()) {
      if (vf_in.empty() || vf_orient.empty() || vf_cert.empty())
        throw std::invalid_argument("file mode wants -i, --orientation and --cert together");
      rc = cmd_verify_files(vf_in, vf_orient, vf_cert);
    } else {
      rc = cmd_verify_suite(vf_scope, vf_fault);
    }
  });

  // play
  auto* play = app.add_subcommand("play", "play one game and emit its transcript");
  std::string pl_in, pl_orient, pl_mb = "1:1", pl_first = "maker", pl_maker = "tree",
              pl_breaker = "reactive", pl_monitors, pl_out, pl_replay;
  std::uint64_t pl_seed = 1;
  int pl_target = 0;
  play->add_option("-i,--in", pl_in, "edge list input")->required();
  play->add_option("--orientation", pl_orient, "orientation file for oriented play");
  play->add_option("--mb", pl_mb, "bias M:B");
  play->add_option("--first", pl_first, "maker|breaker");
  play->add_option("--maker", pl_maker, "Maker strategy name");
  play->add_option("--breaker", pl_breaker, "Breaker strategy name");
  play->add_option("--monitors", pl_monitors,
                   "comma list: free-edge-budget,directed-tree,out-arc-height,width or all");
  play->add_option("--seed", pl_seed, "game seed (randomized strategies)");
  play->add_option("--target", pl_target, "stop once Maker reaches this component size");
  play->add_option("-o,--out", pl_out, "transcript output (stdout when omitted)");
  play->add_option("--replay", pl_replay, "replay this transcript instead of playing");
  play->callback([&] {
    rc = cmd_play(pl_in, pl_orient, pl_mb, pl_first, pl_maker, pl_breaker, pl_monitors, pl_seed,
                  pl_target, pl_out, pl_replay);
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact winner on small boards");
  std::string orc_in, orc_mb = "1:1", orc_first = "maker";
  int orc_target = 0;
  oracle->add_option("-i,--in", orc_in, "edge list input")->required();
  oracle->add_option("--mb", orc_mb, "bias M:B");
  oracle->add_option("--first", orc_first, "maker|breaker");
  oracle->add_option("--target", orc_target, "component size Maker plays for")->required();
  oracle->callback([&] { rc = cmd_oracle(orc_in, orc_mb, orc_first, orc_target); });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "bias sweep on random regular graphs, CSV out");
  int sw_n = 0, sw_d = 0, sw_m = 1, sw_seeds = 10, sw_jobs = 1;
  std::uint64_t sw_seed = 1;
  std::vector<int> sw_biases;
  std::string sw_maker = "tree", sw_breaker, sw_first = "maker", sw_csv;
  sweep->add_option("--n", sw_n, "vertex count")->required();
  sweep->add_option("--d", sw_d, "degree")->required();
  sweep->add_option("--m", sw_m, "Maker bias");
  sweep->add_option("--biases", sw_biases, "Breaker biases")->required()->delimiter(',');
  sweep->add_option("--seed", sw_seed, "first seed");
  sweep->add_option("--seeds", sw_seeds, "number of seeds");
  sweep->add_option("--maker", sw_maker, "Maker strategy name");
  sweep->add_option("--breaker", sw_breaker, "Breaker strategy (default: auto per bias)");
  sweep->add_option("--first", sw_first, "maker|breaker");
  sweep->add_option("--csv", sw_csv, "CSV output path (stdout when omitted)");
  sweep->add_option("--jobs", sw_jobs, "worker threads");
  sweep->callback([&] {
    rc = cmd_sweep(sw_n, sw_d, sw_m, sw_biases, sw_seed, sw_seeds, sw_maker, sw_breaker, sw_first,
                   sw_csv, sw_jobs);
  });

  // scale
  auto* scale = app.add_subcommand("scale", "scaling experiment at the critical biases");
  int sc_d = 4, sc_seeds = 20, sc_jobs = 1;
  std::uint64_t sc_seed = 1;
  std::vector<int> sc_ns{1000, 2000, 4000, 8000};
  std::string sc_makers = "tree", sc_csv;
  scale->add_option("--d", sc_d, "degree");
  scale->add_option("--ns", sc_ns, "graph sizes")->delimiter(',');
  scale->add_option("--seed", sc_seed, "first seed");
  scale->add_option("--seeds", sc_seeds, "number of seeds");
  scale->add_option("--makers", sc_makers, "comma list of Maker strategies");
  scale->add_option("--csv", sc_csv, "CSV output path (stdout when omitted)");
  scale->add_option("--jobs", sc_jobs, "worker threads");
  scale->callback(
      [&] { rc = cmd_scale(sc_d, sc_ns, sc_seed, sc_seeds, sc_makers, sc_csv, sc_jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cg::MonitorViolation& e) {
    std::cerr << "monitor violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

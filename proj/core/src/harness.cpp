#include "cg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cg/parallel.hpp"

namespace cg {

const char kSweepCsvHeader[] =
    "n,d,m,b,seed,maker,breaker,max_component,rounds,forfeited,wall_time_ms";

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kSweepCsvHeader << '\n';
  char ms[32];
  for (const auto& r : rows) {
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_time_ms);
    os << r.n << ',' << r.d << ',' << r.m << ',' << r.b << ',' << r.seed << ',' << r.maker << ','
       << r.breaker << ',' << r.max_component << ',' << r.rounds << ',' << (r.forfeited ? 1 : 0)
       << ',' << ms << '\n';
  }
  return os.str();
}

std::unique_ptr<Strategy> strategy_from_name(const std::string& name, Player side,
                                             std::uint64_t fallback_seed,
                                             const Orientation* orient) {
  auto bracket = [&name](const char* prefix,
                         const char* key) -> std::optional<std::string> {
    if (name == prefix) return std::string();
    std::string open = std::string(prefix) + "[" + key + "=";
    if (name.size() > open.size() && name.compare(0, open.size(), open) == 0 &&
        name.back() == ']')
      return name.substr(open.size(), name.size() - open.size() - 1);
    return std::nullopt;
  };
  if (side == Player::Maker) {
    if (auto v = bracket("tree", "root"))
      return maker_tree_strategy(v->empty() ? 0 : std::stoi(*v));
    if (auto v = bracket("random", "seed"))
      return maker_random(v->empty() ? fallback_seed : std::stoull(*v));
    if (name == "greedy-merge") return maker_greedy_merge();
    throw std::invalid_argument("unknown Maker strategy: " + name);
  }
  if (name == "reactive") return breaker_reactive_greedy();
  if (name == "counter-tree") return breaker_counter_tree();
  if (auto v = bracket("global", "orient")) {
    if (!orient) throw std::invalid_argument("global Breaker needs an orientation");
    if (!v->empty() && *v != orientation_hash_hex(*orient))
      throw std::invalid_argument("global Breaker: orientation hash mismatch");
    return breaker_global(*orient);
  }
  if (auto v = bracket("random", "seed"))
    return breaker_random(v->empty() ? fallback_seed : std::stoull(*v));
  throw std::invalid_argument("unknown Breaker strategy: " + name);
}

std::string auto_breaker_name(int d, int b) { return b == d - 2 ? "global" : "reactive"; }

namespace {

bool wants_orientation(const std::string& breaker) { return breaker.compare(0, 6, "global") == 0; }

SweepRow play_row(const Graph& g, int d, const GameConfig& gcfg, const std::string& maker_name,
                  const std::string& breaker_name, const Orientation* o) {
  auto maker = strategy_from_name(maker_name, Player::Maker, gcfg.seed, nullptr);
  auto breaker = strategy_from_name(breaker_name, Player::Breaker, gcfg.seed, o);
  SweepRow row;
  row.n = g.vertex_count();
  row.d = d;
  row.m = gcfg.m;
  row.b = gcfg.b;
  row.seed = gcfg.seed;
  row.maker = maker->name();
  row.breaker = breaker->name();
  auto t0 = std::chrono::steady_clock::now();
  GameState st = o ? GameState(g, gcfg, *o) : GameState(g, gcfg);
  PlayOutcome out = play(st, *maker, *breaker);
  auto t1 = std::chrono::steady_clock::now();
  row.max_component = out.max_component;
  row.rounds = out.rounds;
  row.forfeited = out.forfeited;
  row.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return row;
}

}  // namespace

SweepRow run_row(int n, int d, int m, int b, std::uint64_t seed, const std::string& maker,
                 const std::string& breaker, Player first, const Orientation* orient) {
  Graph g = random_regular(n, d, seed);
  std::optional<std::pair<Orientation, OrientationCertificate>> own;
  const Orientation* o = orient;
  if (wants_orientation(breaker) && !o) {
    own = short_orientation(g);
    o = &own->first;
  }
  GameConfig gcfg;
  gcfg.m = m;
  gcfg.b = b;
  gcfg.first = first;
  gcfg.seed = seed;
  return play_row(g, d, gcfg, maker, breaker, o);
}

std::vector<SweepRow> bias_sweep(const SweepConfig& cfg) {
  if (cfg.n <= 0 || cfg.d <= 0) throw std::invalid_argument("bias_sweep: need n > 0 and d > 0");
  struct Task {
    int b;
    std::uint64_t seed;
    std::string breaker;
  };
  std::vector<Task> tasks;
  for (int b : cfg.biases)
    for (std::uint64_t s : cfg.seeds)
      tasks.push_back({b, s, cfg.breaker.empty() ? auto_breaker_name(cfg.d, b) : cfg.breaker});

  // Orientations are per seed graph; build them up front so the parallel
  // phase reads the map without locking.
  std::map<std::uint64_t, std::pair<Orientation, OrientationCertificate>> orients;
  for (const auto& t : tasks)
    if (wants_orientation(t.breaker) && orients.find(t.seed) == orients.end())
      orients.emplace(t.seed, short_orientation(random_regular(cfg.n, cfg.d, t.seed)));

  std::vector<SweepRow> rows(tasks.size());
  parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
    const Task& t = tasks[i];
    const Orientation* o =
        wants_orientation(t.breaker) ? &orients.at(t.seed).first : nullptr;
    rows[i] = run_row(cfg.n, cfg.d, cfg.m, t.b, t.seed, cfg.maker, t.breaker, cfg.first, o);
  });
  return rows;
}

ScaleResult scaling_experiment(const ScaleConfig& cfg) {
  if (cfg.d < 3) throw std::invalid_argument("scaling_experiment: d must be at least 3");
  if (cfg.makers.empty()) throw std::invalid_argument("scaling_experiment: no makers");
  ScaleResult res;

  struct Task {
    int n;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (int n : cfg.ns)
    for (std::uint64_t s : cfg.seeds) tasks.push_back({n, s});
  std::size_t mk = cfg.makers.size();
  res.breaker_rows.resize(tasks.size() * mk);
  res.reports.resize(tasks.size() * mk);

  int bb = cfg.d - 2;
  parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
    Graph g = random_regular(tasks[i].n, cfg.d, tasks[i].seed);
    auto [orient, cert] = short_orientation(g);
    double bound = 1.0 + static_cast<double>(cert.certified_bound) * (2 * cfg.d - 2);
    GameConfig gcfg;
    gcfg.b = bb;
    gcfg.first = cfg.first;
    gcfg.seed = tasks[i].seed;
    for (std::size_t j = 0; j < mk; ++j) {
      SweepRow row = play_row(g, cfg.d, gcfg, cfg.makers[j], "global", &orient);
      BoundReport rep{cfg.d,
                      tasks[i].n,
                      bb,
                      "global-breaker-bound",
                      bound,
                      static_cast<double>(row.max_component),
                      row.max_component <= bound};
      res.breaker_rows[i * mk + j] = std::move(row);
      res.reports[i * mk + j] = std::move(rep);
    }
  });

  if (cfg.d == 3) {
    res.maker_track_skipped = true;
  } else {
    int mb = cfg.d - 3;
    res.maker_rows.resize(tasks.size());
    parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
      res.maker_rows[i] =
          run_row(tasks[i].n, cfg.d, 1, mb, tasks[i].seed, "tree", "reactive", cfg.first);
    });
    for (int n : cfg.ns) {
      std::vector<double> fr;
      for (const auto& r : res.maker_rows)
        if (r.n == n) fr.push_back(static_cast<double>(r.max_component) / n);
      if (!fr.empty()) res.maker_median_fraction.emplace_back(n, median(std::move(fr)));
    }
  }
  return res;
}

std::vector<std::uint64_t> seed_range(std::uint64_t base, int count) {
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(std::max(0, count)));
  for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = base + i;
  return seeds;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  std::size_t h = values.size() / 2;
  return values.size() % 2 ? values[h] : (values[h - 1] + values[h]) / 2.0;
}

}  // namespace cg

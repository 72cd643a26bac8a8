#include <algorithm>
#include <string>
#include <vector>

#include "cg/harness.hpp"
#include "doctest.h"

using cg::SweepRow;

namespace {

SweepRow strip_wall(SweepRow r) {
  r.wall_time_ms = 0.0;
  return r;
}

bool same_modulo_wall(const SweepRow& a, const SweepRow& b) {
  auto x = strip_wall(a), y = strip_wall(b);
  return x.n == y.n && x.d == y.d && x.m == y.m && x.b == y.b && x.seed == y.seed &&
         x.maker == y.maker && x.breaker == y.breaker && x.max_component == y.max_component &&
         x.rounds == y.rounds && x.forfeited == y.forfeited;
}

}  // namespace

TEST_CASE("csv schema is pinned") {
  CHECK(std::string(cg::kSweepCsvHeader) ==
        "n,d,m,b,seed,maker,breaker,max_component,rounds,forfeited,wall_time_ms");
  SweepRow row;
  row.n = 40;
  row.d = 4;
  row.m = 1;
  row.b = 2;
  row.seed = 7;
  row.maker = "tree[root=0]";
  row.breaker = "reactive";
  row.max_component = 5;
  row.rounds = 9;
  row.forfeited = true;
  row.wall_time_ms = 1.5;
  CHECK(cg::to_csv({row}) ==
        std::string(cg::kSweepCsvHeader) + "\n40,4,1,2,7,tree[root=0],reactive,5,9,1,1.500\n");
  CHECK(cg::to_csv({}) == std::string(cg::kSweepCsvHeader) + "\n");
}

TEST_CASE("auto breaker selection per bias regime") {
  CHECK(cg::auto_breaker_name(4, 2) == "global");
  CHECK(cg::auto_breaker_name(3, 1) == "global");
  CHECK(cg::auto_breaker_name(4, 1) == "reactive");
  CHECK(cg::auto_breaker_name(4, 3) == "reactive");
  CHECK(cg::auto_breaker_name(5, 3) == "global");
}

TEST_CASE("rows are reproducible from their parameters") {
  auto a = cg::run_row(40, 4, 1, 1, 5, "tree", "reactive", cg::Player::Maker);
  auto b = cg::run_row(40, 4, 1, 1, 5, "tree", "reactive", cg::Player::Maker);
  CHECK(same_modulo_wall(a, b));
  CHECK(a.maker == "tree[root=0]");
  CHECK(a.breaker == "reactive");
  CHECK(a.n == 40);
  CHECK(a.max_component >= 1);
  CHECK(a.max_component <= 40);

  // a seed-less random maker takes the row seed, so it reproduces too
  auto c = cg::run_row(40, 4, 1, 1, 5, "random", "reactive", cg::Player::Maker);
  auto d = cg::run_row(40, 4, 1, 1, 5, "random", "reactive", cg::Player::Maker);
  CHECK(same_modulo_wall(c, d));
  CHECK(c.maker == "random[seed=5]");
}

TEST_CASE("bias sweep is deterministic under any parallelism degree") {
  cg::SweepConfig cfg;
  cfg.n = 40;
  cfg.d = 4;
  cfg.biases = {1, 2, 4};
  cfg.seeds = {1, 2};
  cfg.jobs = 1;
  auto serial = cg::bias_sweep(cfg);
  cfg.jobs = 3;
  auto parallel = cg::bias_sweep(cfg);
  REQUIRE(serial.size() == 6);
  REQUIRE(parallel.size() == 6);
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(same_modulo_wall(serial[i], parallel[i]));

  for (const auto& row : serial) {
    if (row.b == 2)
      CHECK(row.breaker.rfind("global[orient=", 0) == 0);
    else
      CHECK(row.breaker == "reactive");
    CHECK(row.maker == "tree[root=0]");
  }
}

TEST_CASE("empty seed set gives an empty sweep") {
  cg::SweepConfig cfg;
  cfg.n = 40;
  cfg.d = 4;
  cfg.biases = {1};
  auto rows = cg::bias_sweep(cfg);
  CHECK(rows.empty());
  CHECK(cg::to_csv(rows) == std::string(cg::kSweepCsvHeader) + "\n");
}

TEST_CASE("scaling experiment bounds and maker track") {
  cg::ScaleConfig cfg;
  cfg.d = 4;
  cfg.ns = {40, 60};
  cfg.seeds = {1, 2};
  auto res = cg::scaling_experiment(cfg);
  REQUIRE(res.breaker_rows.size() == 4);
  REQUIRE(res.reports.size() == 4);
  for (const auto& rep : res.reports) {
    CHECK(rep.bound_name == "global-breaker-bound");
    CHECK(rep.pass);
    CHECK(rep.observed_value <= rep.bound_value);
  }
  CHECK(!res.maker_track_skipped);
  CHECK(res.maker_rows.size() == 4);
  REQUIRE(res.maker_median_fraction.size() == 2);
  CHECK(res.maker_median_fraction[0].first == 40);
  for (const auto& [n, frac] : res.maker_median_fraction) {
    CHECK(frac > 0.0);
    CHECK(frac <= 1.0);
  }
}

TEST_CASE("the cubic maker track is skipped") {
  cg::ScaleConfig cfg;
  cfg.d = 3;
  cfg.ns = {40};
  cfg.seeds = {1};
  auto res = cg::scaling_experiment(cfg);
  CHECK(res.maker_track_skipped);
  CHECK(res.maker_rows.empty());
  CHECK(res.maker_median_fraction.empty());
  CHECK(res.breaker_rows.size() == 1);
}

TEST_CASE("seed ranges and medians") {
  auto seeds = cg::seed_range(10, 3);
  CHECK(seeds == std::vector<std::uint64_t>{10, 11, 12});
  CHECK(cg::seed_range(1, 0).empty());
  CHECK(cg::median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(cg::median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  CHECK(cg::median({7.0}) == 7.0);
}

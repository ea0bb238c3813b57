#include <algorithm>
#include <random>

#include "doctest.h"
#include "tdgen/errors.hpp"
#include "tdgen/sweep.hpp"

using namespace tdgen;

namespace {

SweepConfig mini_config() {
    SweepConfig cfg;
    cfg.n_values = {10};
    cfg.densities = {0.05, 0.10};
    cfg.maxc_offsets = {1};
    cfg.widths = {150.0, 200.0};
    cfg.seeds_per_config = 1;
    cfg.master_seed = 99;
    return cfg;
}

}  // namespace

TEST_CASE("sweep: row bookkeeping and cell layout") {
    const SweepConfig cfg = mini_config();
    const SweepResult result = run_sweep(cfg);
    CHECK(result.rows.size() == 1 * 2 * 1 * 2 * 1);
    REQUIRE(result.cells.size() == 2);
    for (const CellStats& c : result.cells) {
        CHECK(c.n == 10);
        CHECK(c.rows == 2);
        CHECK(c.mean_rel_diff_pct >= c.min_rel_diff_pct);
        CHECK(c.min_attained_count >= 1);
        CHECK(c.min_attained_count <= c.rows);
    }
    // n_c = round(den * 45): 2 and 4 (4.5 ties to even)
    CHECK(result.cells[0].n_c == 2);
    CHECK(result.cells[1].n_c == 4);
}

TEST_CASE("sweep: log round trip reproduces the aggregated summary") {
    const SweepConfig cfg = mini_config();
    const SweepResult result = run_sweep(cfg);
    const std::string log = format_sweep_log(cfg, result);
    const std::vector<SweepRow> parsed = parse_sweep_log(log);
    REQUIRE(parsed.size() == result.rows.size());
    const auto recomputed = aggregate_rows(parsed);
    REQUIRE(recomputed.size() == result.cells.size());
    for (std::size_t k = 0; k < recomputed.size(); ++k) {
        CHECK(recomputed[k].mean_rel_diff_pct == result.cells[k].mean_rel_diff_pct);
        CHECK(recomputed[k].min_rel_diff_pct == result.cells[k].min_rel_diff_pct);
        CHECK(recomputed[k].min_attained_count == result.cells[k].min_attained_count);
        CHECK(recomputed[k].mean_separation == result.cells[k].mean_separation);
        CHECK(recomputed[k].mean_duration == result.cells[k].mean_duration);
    }
    CHECK(format_sweep_summary(cfg, result) == format_sweep_summary(cfg, result));
}

TEST_CASE("sweep: byte-identical output under a fixed master seed") {
    const SweepConfig cfg = mini_config();
    const SweepResult a = run_sweep(cfg);
    const SweepResult b = run_sweep(cfg);
    CHECK(format_sweep_log(cfg, a) == format_sweep_log(cfg, b));
    CHECK(format_sweep_summary(cfg, a) == format_sweep_summary(cfg, b));
}

TEST_CASE("sweep: aggregation ignores row order") {
    const SweepConfig cfg = mini_config();
    const SweepResult result = run_sweep(cfg);
    std::vector<SweepRow> shuffled = result.rows;
    std::mt19937 shuffle_rng(7);
    std::shuffle(shuffled.begin(), shuffled.end(), shuffle_rng);
    const auto cells = aggregate_rows(shuffled);
    REQUIRE(cells.size() == result.cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
        CHECK(cells[k].mean_rel_diff_pct == doctest::Approx(result.cells[k].mean_rel_diff_pct));
        CHECK(cells[k].min_rel_diff_pct == result.cells[k].min_rel_diff_pct);
        CHECK(cells[k].min_attained_count == result.cells[k].min_attained_count);
    }
}

TEST_CASE("sweep: a density that rounds to zero conflicts is rejected") {
    SweepConfig cfg = mini_config();
    cfg.densities = {0.001};  // 45 * 0.001 rounds to 0
    CHECK_THROWS_AS(run_sweep(cfg), InvalidParameter);
}

TEST_CASE("sweep: config validation") {
    SweepConfig cfg = mini_config();
    cfg.n_values.clear();
    CHECK_THROWS_AS(run_sweep(cfg), InvalidParameter);

    cfg = mini_config();
    cfg.densities = {1.5};
    CHECK_THROWS_AS(run_sweep(cfg), InvalidParameter);

    cfg = mini_config();
    cfg.seeds_per_config = 0;
    CHECK_THROWS_AS(run_sweep(cfg), InvalidParameter);
}

TEST_CASE("sweep: default widths depend on the dimension") {
    CHECK(default_widths(Dimension::TwoD) == std::vector<double>{150.0, 200.0, 250.0, 300.0});
    CHECK(default_widths(Dimension::ThreeD) == std::vector<double>{60.0, 80.0, 100.0, 150.0});
}

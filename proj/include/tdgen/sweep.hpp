#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tdgen/congestion.hpp"

namespace tdgen {

// Sweep over aircraft counts and conflict densities; per (n, den) cell, one
// pseudo-random instance per (width, max_c offset, repetition) configuration.
// max_c = round(4*n_c/n) + t, clamped to [1, n-1].
struct SweepConfig {
    std::vector<int> n_values{10, 15, 20};
    std::vector<double> densities{0.05, 0.10};
    std::vector<int> maxc_offsets{1, 2};
    std::vector<double> widths;  // defaults depend on dimension; see default_widths
    int seeds_per_config = 2;    // repetitions of each (width, t) configuration
    Dimension dimension = Dimension::TwoD;
    double margin = 10.0;
    SpeedRange speed;
    BorderConfig borders = BorderConfig::AllBorders;
    int max_trials = 2500;
    double safety_distance = kDefaultSafetyDistance;
    std::uint64_t master_seed = 0;
};

std::vector<double> default_widths(Dimension dim);

// One generated instance.
struct SweepRow {
    int n = 0;
    double den = 0.0;
    long long n_c = 0;
    double width = 0.0;
    int t = 0;
    std::uint64_t seed = 0;
    long long achieved = 0;
    double rel_diff_pct = 0.0;          // 100 * |n_c - achieved| / n_c
    bool has_separation = false;
    double mean_separation = 0.0;       // [NM], over the instance's conflicting pairs
    bool has_duration = false;
    double mean_duration = 0.0;         // [min]
};

// Aggregated statistics of one (n, den) cell.
struct CellStats {
    int n = 0;
    double den = 0.0;
    long long n_c = 0;
    int rows = 0;
    double mean_rel_diff_pct = 0.0;
    double min_rel_diff_pct = 0.0;
    int min_attained_count = 0;
    bool has_separation = false;
    double mean_separation = 0.0;  // mean of per-instance means, conflict-bearing rows only
    bool has_duration = false;
    double mean_duration = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<CellStats> cells;
};

SweepResult run_sweep(const SweepConfig& config);

// Cell statistics from raw rows; independent of row order. Exposed so the
// summary can be recomputed from a parsed log.
std::vector<CellStats> aggregate_rows(const std::vector<SweepRow>& rows);

// Human-oriented tables (one block per statistic, n rows by den columns).
std::string format_sweep_summary(const SweepConfig& config, const SweepResult& result);

// Machine-oriented log, one line per instance, full precision.
std::string format_sweep_log(const SweepConfig& config, const SweepResult& result);
std::vector<SweepRow> parse_sweep_log(const std::string& text);

}  // namespace tdgen

#pragma once

#include <optional>
#include <string>

#include "tdgen/geometry.hpp"

namespace tdgen {

// Instance complexity indicators: conflict count, conflict density, and the
// per-pair separation/duration statistics.
struct ComplexityReport {
    int n = 0;
    int n_conflicts = 0;
    double density = 0.0;  // n_conflicts / (n*(n-1)/2)
    std::vector<PairConflict> conflicts;
    std::optional<double> mean_min_separation;  // [NM], over conflicting pairs
    std::optional<double> mean_duration;        // [min], over bounded conflicts
    int unbounded_conflicts = 0;
    std::optional<long long> requested_conflicts;
    std::optional<double> relative_difference;  // |n_c - n'_c| / n_c
};

ComplexityReport analyze(const Instance& inst);

// Line-oriented text form of a report; deterministic for equal inputs.
std::string format_report(const ComplexityReport& report);

}  // namespace tdgen

#include "tdgen/analysis.hpp"

#include <cmath>

#include "tdgen/util.hpp"

namespace tdgen {

ComplexityReport analyze(const Instance& inst) {
    ComplexityReport r;
    r.n = inst.size();
    r.conflicts = detect_conflicts(inst);
    r.n_conflicts = static_cast<int>(r.conflicts.size());
    const long long pairs = static_cast<long long>(r.n) * (r.n - 1) / 2;
    r.density = pairs > 0 ? static_cast<double>(r.n_conflicts) / static_cast<double>(pairs) : 0.0;

    double sum_sep = 0.0;
    double sum_dur = 0.0;
    int bounded = 0;
    for (const PairConflict& c : r.conflicts) {
        sum_sep += c.d_min;
        if (c.unbounded) {
            ++r.unbounded_conflicts;
        } else {
            sum_dur += c.duration_min;
            ++bounded;
        }
    }
    if (r.n_conflicts > 0) r.mean_min_separation = sum_sep / r.n_conflicts;
    if (bounded > 0) r.mean_duration = sum_dur / bounded;

    if (inst.metadata.requested_conflicts) {
        r.requested_conflicts = *inst.metadata.requested_conflicts;
        if (*r.requested_conflicts != 0) {
            r.relative_difference =
                std::abs(static_cast<double>(*r.requested_conflicts - r.n_conflicts)) /
                static_cast<double>(*r.requested_conflicts);
        }
    }
    return r;
}

std::string format_report(const ComplexityReport& r) {
    std::string s;
    s += "n: " + std::to_string(r.n) + "\n";
    s += "conflicts: " + std::to_string(r.n_conflicts) + "\n";
    s += "density: " + format_double(r.density) + "\n";
    if (r.mean_min_separation)
        s += "mean-min-separation: " + format_double(*r.mean_min_separation) + "\n";
    if (r.mean_duration) s += "mean-duration: " + format_double(*r.mean_duration) + "\n";
    if (r.unbounded_conflicts > 0)
        s += "unbounded-conflicts: " + std::to_string(r.unbounded_conflicts) + "\n";
    if (r.requested_conflicts)
        s += "requested-conflicts: " + std::to_string(*r.requested_conflicts) + "\n";
    if (r.relative_difference)
        s += "relative-difference: " + format_double(*r.relative_difference) + "\n";
    for (const PairConflict& c : r.conflicts) {
        s += "conflict: " + std::to_string(c.i) + " " + std::to_string(c.j) + " " +
             format_double(c.t_cpa) + " " + format_double(c.d_min) + " " +
             format_double(c.t_enter) + " ";
        if (c.unbounded)
            s += "unbounded unbounded\n";
        else
            s += format_double(c.t_exit) + " " + format_double(c.duration_min) + "\n";
    }
    return s;
}

}  // namespace tdgen

#include "tdgen/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "tdgen/analysis.hpp"
#include "tdgen/errors.hpp"
#include "tdgen/util.hpp"

namespace tdgen {

namespace {

std::string pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string compact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

long long cell_nc(int n, double den) {
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    const long long n_c = round_half_even(den * static_cast<double>(pairs));
    if (n_c < 1)
        throw InvalidParameter("sweep: density " + format_double(den) + " rounds to zero target conflicts at n = " +
                               std::to_string(n));
    return n_c;
}

}  // namespace

std::vector<double> default_widths(Dimension dim) {
    // desk-scale subsample of the full width ladders, spread across the range
    if (dim == Dimension::ThreeD) return {60.0, 80.0, 100.0, 150.0};
    return {150.0, 200.0, 250.0, 300.0};
}

SweepResult run_sweep(const SweepConfig& cfg) {
    if (cfg.n_values.empty() || cfg.densities.empty() || cfg.maxc_offsets.empty())
        throw InvalidParameter("sweep: n, density, and offset lists must be non-empty");
    if (cfg.seeds_per_config < 1) throw InvalidParameter("sweep: seeds per configuration must be >= 1");
    for (double den : cfg.densities)
        if (!(den > 0.0) || den > 1.0)
            throw InvalidParameter("sweep: densities must lie in (0, 1]");
    const std::vector<double> widths = cfg.widths.empty() ? default_widths(cfg.dimension) : cfg.widths;

    SweepResult result;
    for (int n : cfg.n_values) {
        for (double den : cfg.densities) {
            const long long n_c = cell_nc(n, den);
            const long long s = round_half_even(4.0 * static_cast<double>(n_c) / n);
            for (double w : cfg.widths.empty() ? widths : cfg.widths) {
                for (int t : cfg.maxc_offsets) {
                    const long long max_c =
                        std::clamp(s + t, 1LL, static_cast<long long>(n - 1));
                    for (int rep = 0; rep < cfg.seeds_per_config; ++rep) {
                        // Seed from semantic coordinates, not loop indices, so
                        // statistics do not depend on configuration order.
                        std::uint64_t seed = cfg.master_seed;
                        seed = mix_seed(seed, cfg.dimension == Dimension::ThreeD ? 3 : 2);
                        seed = mix_seed(seed, static_cast<std::uint64_t>(n));
                        seed = mix_seed(seed, static_cast<std::uint64_t>(std::llround(den * 1e6)));
                        seed = mix_seed(seed, static_cast<std::uint64_t>(std::llround(w * 1e3)));
                        seed = mix_seed(seed, static_cast<std::uint64_t>(t));
                        seed = mix_seed(seed, static_cast<std::uint64_t>(rep));

                        PseudoRandomParams params;
                        params.n = n;
                        params.congestion.n_c = n_c;
                        params.congestion.max_c = max_c;
                        params.box = {w, w, w, cfg.margin};
                        params.borders = cfg.borders;
                        params.speed = cfg.speed;
                        params.max_trials = cfg.max_trials;
                        params.dimension = cfg.dimension;
                        params.safety_distance = cfg.safety_distance;
                        params.seed = seed;
                        const Instance inst = gen_pseudorandom(params);
                        const ComplexityReport report = analyze(inst);

                        SweepRow row;
                        row.n = n;
                        row.den = den;
                        row.n_c = n_c;
                        row.width = w;
                        row.t = t;
                        row.seed = seed;
                        row.achieved = report.n_conflicts;
                        row.rel_diff_pct = 100.0 *
                                           std::abs(static_cast<double>(n_c - row.achieved)) /
                                           static_cast<double>(n_c);
                        if (report.mean_min_separation) {
                            row.has_separation = true;
                            row.mean_separation = *report.mean_min_separation;
                        }
                        if (report.mean_duration) {
                            row.has_duration = true;
                            row.mean_duration = *report.mean_duration;
                        }
                        result.rows.push_back(row);
                    }
                }
            }
        }
    }
    result.cells = aggregate_rows(result.rows);
    return result;
}

std::vector<CellStats> aggregate_rows(const std::vector<SweepRow>& rows) {
    std::map<std::pair<int, double>, std::vector<const SweepRow*>> cells;
    for (const SweepRow& r : rows) cells[{r.n, r.den}].push_back(&r);

    std::vector<CellStats> out;
    for (const auto& [key, group] : cells) {
        CellStats c;
        c.n = key.first;
        c.den = key.second;
        c.n_c = group.front()->n_c;
        c.rows = static_cast<int>(group.size());
        double sum_rel = 0.0, sum_sep = 0.0, sum_dur = 0.0;
        int n_sep = 0, n_dur = 0;
        double min_rel = group.front()->rel_diff_pct;
        for (const SweepRow* r : group) min_rel = std::min(min_rel, r->rel_diff_pct);
        int attained = 0;
        for (const SweepRow* r : group) {
            sum_rel += r->rel_diff_pct;
            if (r->rel_diff_pct == min_rel) ++attained;
            if (r->has_separation) {
                sum_sep += r->mean_separation;
                ++n_sep;
            }
            if (r->has_duration) {
                sum_dur += r->mean_duration;
                ++n_dur;
            }
        }
        c.mean_rel_diff_pct = sum_rel / c.rows;
        c.min_rel_diff_pct = min_rel;
        c.min_attained_count = attained;
        if (n_sep > 0) {
            c.has_separation = true;
            c.mean_separation = sum_sep / n_sep;
        }
        if (n_dur > 0) {
            c.has_duration = true;
            c.mean_duration = sum_dur / n_dur;
        }
        out.push_back(c);
    }
    return out;
}

std::string format_sweep_summary(const SweepConfig& cfg, const SweepResult& result) {
    // cells arrive sorted by (n, den); lay them out as n rows x den columns
    std::vector<int> ns = cfg.n_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::vector<double> dens = cfg.densities;
    std::sort(dens.begin(), dens.end());
    dens.erase(std::unique(dens.begin(), dens.end()), dens.end());

    const auto find_cell = [&](int n, double den) -> const CellStats* {
        for (const CellStats& c : result.cells)
            if (c.n == n && c.den == den) return &c;
        return nullptr;
    };

    std::ostringstream os;
    os << "sweep summary (" << (cfg.dimension == Dimension::ThreeD ? "3D" : "2D") << ", "
       << result.rows.size() << " instances, master seed " << cfg.master_seed << ")\n";
    const auto block = [&](const char* title, auto value) {
        os << "\n# " << title << "\n";
        os << "n\\den";
        for (double den : dens) os << "\t" << compact(den);
        os << "\n";
        for (int n : ns) {
            os << n;
            for (double den : dens) {
                const CellStats* c = find_cell(n, den);
                os << "\t" << (c ? value(*c) : std::string("-"));
            }
            os << "\n";
        }
    };
    block("mean relative difference [%]",
          [](const CellStats& c) { return pct(c.mean_rel_diff_pct); });
    block("best relative difference [%] (instances attaining it)", [](const CellStats& c) {
        return pct(c.min_rel_diff_pct) + " (" + std::to_string(c.min_attained_count) + ")";
    });
    block("mean minimal separation [NM]", [](const CellStats& c) {
        return c.has_separation ? pct(c.mean_separation) : std::string("-");
    });
    block("mean conflict duration [min]", [](const CellStats& c) {
        return c.has_duration ? pct(c.mean_duration) : std::string("-");
    });
    return os.str();
}

std::string format_sweep_log(const SweepConfig& cfg, const SweepResult& result) {
    std::ostringstream os;
    os << "# dim n den nc width t seed achieved rel_diff_pct mean_sep mean_dur\n";
    const char* dim = cfg.dimension == Dimension::ThreeD ? "3" : "2";
    for (const SweepRow& r : result.rows) {
        os << dim << " " << r.n << " " << format_double(r.den) << " " << r.n_c << " "
           << format_double(r.width) << " " << r.t << " " << r.seed << " " << r.achieved << " "
           << format_double(r.rel_diff_pct) << " "
           << (r.has_separation ? format_double(r.mean_separation) : "-") << " "
           << (r.has_duration ? format_double(r.mean_duration) : "-") << "\n";
    }
    return os.str();
}

std::vector<SweepRow> parse_sweep_log(const std::string& text) {
    std::vector<SweepRow> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string dim, den, width, rel, sep, dur, seed;
        SweepRow r;
        if (!(ls >> dim >> r.n >> den >> r.n_c >> width >> r.t >> seed >> r.achieved >> rel >>
              sep >> dur))
            throw MalformedFile("sweep log: cannot parse line \"" + line + "\"");
        if (!parse_double(den, r.den) || !parse_double(width, r.width) ||
            !parse_double(rel, r.rel_diff_pct))
            throw MalformedFile("sweep log: cannot parse numbers in \"" + line + "\"");
        r.seed = std::stoull(seed);
        if (sep != "-") {
            r.has_separation = true;
            if (!parse_double(sep, r.mean_separation))
                throw MalformedFile("sweep log: bad separation in \"" + line + "\"");
        }
        if (dur != "-") {
            r.has_duration = true;
            if (!parse_double(dur, r.mean_duration))
                throw MalformedFile("sweep log: bad duration in \"" + line + "\"");
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace tdgen

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdgen/analysis.hpp"
#include "tdgen/congestion.hpp"
#include "tdgen/errors.hpp"
#include "tdgen/io.hpp"
#include "tdgen/scenarios.hpp"
#include "tdgen/svg.hpp"
#include "tdgen/sweep.hpp"
#include "tdgen/util.hpp"
#include "tdgen/version.hpp"

namespace {

using namespace tdgen;

int g_exit = kExitOk;

// Relative outputs land in $TDGEN_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("TDGEN_OUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p;
}

void write_text(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    const auto path = resolve_out(out);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw MalformedFile("cannot write \"" + path.string() + "\"");
    f << text;
}

void emit_instance(const Instance& inst, const std::string& out) {
    const ComplexityReport report = analyze(inst);
    if (out.empty()) {
        std::cout << render_instance(inst);
    } else {
        write_instance(inst, resolve_out(out));
    }
    std::cerr << inst.metadata.scenario << ": n=" << report.n << " conflicts=" << report.n_conflicts
              << " density=" << format_double(report.density);
    if (inst.metadata.requested_conflicts)
        std::cerr << " requested=" << *inst.metadata.requested_conflicts;
    if (!out.empty()) std::cerr << " -> " << resolve_out(out).string();
    std::cerr << "\n";
}

// Per-plane lists accept either one shared value or exactly one per plane.
template <typename T>
std::vector<T> expand_per_plane(std::vector<T> values, int planes, const char* flag) {
    if (planes == 0) return {};
    if (values.size() == 1) values.assign(planes, values[0]);
    if (static_cast<int>(values.size()) != planes)
        throw InvalidParameter(std::string(flag) + ": expected 1 or " + std::to_string(planes) +
                               " comma-separated values, got " + std::to_string(values.size()));
    return values;
}

Dimension parse_dim(int dim) {
    if (dim == 2) return Dimension::TwoD;
    if (dim == 3) return Dimension::ThreeD;
    throw InvalidParameter("--dim must be 2 or 3");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tdgen: aircraft tactical-deconfliction benchmark instance generator"};
    app.set_version_flag("--version", std::string("tdgen ") + kGeneratorVersion);
    app.require_subcommand(1);

    // ---- circle ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("circle", "Aircraft on a circle, headed at its center");
        auto p = std::make_shared<CircleParams>();
        p->n = 10;
        cmd->add_option("--n", p->n, "number of aircraft")->capture_default_str();
        cmd->add_option("--radius", p->radius, "circle radius [NM]")->capture_default_str();
        cmd->add_option("--sector-start", p->sector_start, "sector start angle [deg]")->capture_default_str();
        cmd->add_option("--sector-width", p->sector_width, "sector width [deg]")->capture_default_str();
        cmd->add_option("--speed", p->speed, "aircraft speed [NM/h]")->capture_default_str();
        cmd->add_option("--deviation", p->deviation_range, "heading deviation half-width [deg]")->capture_default_str();
        cmd->add_option("--dmin", p->safety_distance, "safety distance D [NM]")->capture_default_str();
        cmd->add_option("--seed", p->seed, "random seed")->capture_default_str();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "output instance file (stdout when omitted)");
        cmd->callback([p, out] { emit_instance(gen_circle(*p), *out); });
    }

    // ---- sphere ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("sphere", "Aircraft on a sphere, headed at its center");
        auto p = std::make_shared<SphereParams>();
        p->n = 15;
        cmd->add_option("--n", p->n, "number of aircraft")->capture_default_str();
        cmd->add_option("--radius", p->radius, "sphere radius [NM]")->capture_default_str();
        cmd->add_option("--sector-start", p->sector_start, "azimuth sector start [deg]")->capture_default_str();
        cmd->add_option("--sector-width", p->sector_width, "azimuth sector width [deg]")->capture_default_str();
        cmd->add_option("--phi-min", p->phi_min, "polar sector lower bound [deg]")->capture_default_str();
        cmd->add_option("--phi-max", p->phi_max, "polar sector upper bound [deg]")->capture_default_str();
        cmd->add_option("--speed", p->speed, "aircraft speed [NM/h]")->capture_default_str();
        cmd->add_option("--deviation", p->deviation_range, "heading deviation half-width [deg]")->capture_default_str();
        cmd->add_flag("--random-placement", p->random_placement,
                      "sample positions uniformly instead of the spiral lattice");
        cmd->add_option("--dmin", p->safety_distance, "safety distance D [NM]")->capture_default_str();
        cmd->add_option("--seed", p->seed, "random seed")->capture_default_str();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "output instance file (stdout when omitted)");
        cmd->callback([p, out] { emit_instance(gen_sphere(*p), *out); });
    }

    // ---- rhomboidal / grid ----------------------------------------------
    const auto add_rhomboidal_flags = [](CLI::App* cmd, std::shared_ptr<RhomboidalParams> p,
                                         bool with_alpha) {
        cmd->add_option("--mx", p->m_x, "level trails")->capture_default_str();
        cmd->add_option("--my", p->m_y, "slopping trails")->capture_default_str();
        cmd->add_option("--nx", p->n_x, "aircraft per level trail")->capture_default_str();
        cmd->add_option("--ny", p->n_y, "aircraft per slopping trail")->capture_default_str();
        if (with_alpha)
            cmd->add_option("--alpha", p->alpha, "slope of slopping trails [deg]")->capture_default_str();
        cmd->add_option("--trail-sep", p->trail_sep, "separation between parallel trails [NM]")->capture_default_str();
        cmd->add_option("--aircraft-sep", p->aircraft_sep, "separation along a trail [NM]")->capture_default_str();
        cmd->add_option("--speed", p->speed, "aircraft speed [NM/h]")->capture_default_str();
        cmd->add_option("--deviation", p->deviation_range, "per-trail heading deviation [deg]")->capture_default_str();
        cmd->add_option("--dmin", p->safety_distance, "safety distance D [NM]")->capture_default_str();
        cmd->add_option("--seed", p->seed, "random seed")->capture_default_str();
    };
    {
        auto* cmd = app.add_subcommand("rhomboidal", "Two crossing families of parallel trails");
        auto p = std::make_shared<RhomboidalParams>();
        add_rhomboidal_flags(cmd, p, true);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "output instance file (stdout when omitted)");
        cmd->callback([p, out] { emit_instance(gen_rhomboidal(*p), *out); });
    }
    {
        auto* cmd = app.add_subcommand("grid", "Rhomboidal layout with orthogonal trails");
        auto p = std::make_shared<RhomboidalParams>();
        add_rhomboidal_flags(cmd, p, false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "output instance file (stdout when omitted)");
        cmd->callback([p, out] { emit_instance(gen_grid(*p), *out); });
    }

    // ---- polyhedral / cubic ----------------------------------------------
    struct PolyCli {
        int hp = 1;
        int vp = 1;
        std::vector<double> alpha{120.0};
        std::vector<int> mx{2}, my{2}, nx{1}, ny{1};
        std::vector<double> beta{60.0};
        std::vector<int> mz{2}, nz{1};
        PolyhedralParams base;
    };
    const auto add_polyhedral_flags = [](CLI::App* cmd, std::shared_ptr<PolyCli> c,
                                         bool with_angles) -> CLI::Option* {
        cmd->add_option("--hp", c->hp, "horizontal planes")->capture_default_str();
        cmd->add_option("--vp", c->vp, "vertical planes")->capture_default_str();
        if (with_angles)
            cmd->add_option("--alpha", c->alpha, "slopping-trail slope per horizontal plane [deg]")
                ->delimiter(',');
        cmd->add_option("--mx", c->mx, "level trails per horizontal plane")->delimiter(',');
        cmd->add_option("--my", c->my, "slopping trails per horizontal plane")->delimiter(',');
        cmd->add_option("--nx", c->nx, "aircraft per level trail")->delimiter(',');
        cmd->add_option("--ny", c->ny, "aircraft per slopping trail")->delimiter(',');
        if (with_angles)
            cmd->add_option("--beta", c->beta, "trail slope per vertical plane [deg]")->delimiter(',');
        cmd->add_option("--mz", c->mz, "trails per vertical plane")->delimiter(',');
        cmd->add_option("--nz", c->nz, "aircraft per vertical trail")->delimiter(',');
        cmd->add_option("--plane-sep-h", c->base.plane_sep_h, "horizontal plane spacing [NM]")->capture_default_str();
        cmd->add_option("--plane-sep-v", c->base.plane_sep_v, "vertical plane spacing [NM]")->capture_default_str();
        cmd->add_option("--trail-sep", c->base.trail_sep,
                        "trail separation in horizontal planes [NM]; also sets --trail-sep-v")
            ->capture_default_str();
        CLI::Option* tsv = cmd->add_option("--trail-sep-v", c->base.trail_sep_v,
                                           "trail separation in vertical planes [NM]");
        cmd->add_option("--aircraft-sep", c->base.aircraft_sep, "separation along a trail [NM]")->capture_default_str();
        cmd->add_option("--speed", c->base.speed, "aircraft speed [NM/h]")->capture_default_str();
        cmd->add_option("--deviation", c->base.deviation_range, "per-trail heading deviation [deg]")->capture_default_str();
        cmd->add_option("--dmin", c->base.safety_distance, "safety distance D [NM]")->capture_default_str();
        cmd->add_option("--seed", c->base.seed, "random seed")->capture_default_str();
        return tsv;
    };
    const auto build_polyhedral = [](const PolyCli& c) {
        if (c.hp < 0 || c.vp < 0) throw InvalidParameter("--hp and --vp must be >= 0");
        PolyhedralParams p = c.base;
        const auto alpha = expand_per_plane(c.alpha, c.hp, "--alpha");
        const auto mx = expand_per_plane(c.mx, c.hp, "--mx");
        const auto my = expand_per_plane(c.my, c.hp, "--my");
        const auto nx = expand_per_plane(c.nx, c.hp, "--nx");
        const auto ny = expand_per_plane(c.ny, c.hp, "--ny");
        for (int h = 0; h < c.hp; ++h)
            p.horizontal.push_back({alpha[h], mx[h], my[h], nx[h], ny[h]});
        const auto beta = expand_per_plane(c.beta, c.vp, "--beta");
        const auto mz = expand_per_plane(c.mz, c.vp, "--mz");
        const auto nz = expand_per_plane(c.nz, c.vp, "--nz");
        for (int v = 0; v < c.vp; ++v) p.vertical.push_back({beta[v], mz[v], nz[v]});
        return p;
    };
    {
        auto* cmd = app.add_subcommand("polyhedral",
                                       "Stacked rhomboidal planes plus vertical crossing planes");
        auto c = std::make_shared<PolyCli>();
        CLI::Option* tsv = add_polyhedral_flags(cmd, c, true);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "output instance file (stdout when omitted)");
        cmd->callback([c, out, tsv, build_polyhedral] {
            if (!tsv->count()) c->base.trail_sep_v = c->base.trail_sep;
            emit_instance(gen_polyhedral(build_polyhedral(*c)), *out);
        });
    }
    {
        auto* cmd = app.add_subcommand("cubic", "Polyhedral layout with all angles at 90 degrees");
        auto c = std::make_shared<PolyCli>();
        CLI::Option* tsv = add_polyhedral_flags(cmd, c, false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "output instance file (stdout when omitted)");
        cmd->callback([c, out, tsv, build_polyhedral] {
            if (!tsv->count()) c->base.trail_sep_v = c->base.trail_sep;
            emit_instance(gen_cubic(build_polyhedral(*c)), *out);
        });
    }

    // ---- random -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("random", "Uncontrolled random traffic in a box");
        auto p = std::make_shared<RandomParams>();
        auto dim = std::make_shared<int>(2);
        auto wy = std::make_shared<double>(0.0);
        auto wz = std::make_shared<double>(0.0);
        cmd->add_option("--n", p->n, "number of aircraft")->capture_default_str();
        cmd->add_option("--dim", *dim, "2 or 3")->capture_default_str();
        cmd->add_option("--width", p->box.width_x, "sector width [NM]; also sets y and z")->capture_default_str();
        cmd->add_option("--width-y", *wy, "override y width [NM]");
        cmd->add_option("--width-z", *wz, "override z width [NM]");
        cmd->add_option("--theta-min", p->theta.min_deg, "heading range lower bound [deg]")->capture_default_str();
        cmd->add_option("--theta-max", p->theta.max_deg, "heading range upper bound [deg]")->capture_default_str();
        cmd->add_option("--phi-min", p->phi.min_deg, "polar heading lower bound [deg], 3D")->capture_default_str();
        cmd->add_option("--phi-max", p->phi.max_deg, "polar heading upper bound [deg], 3D")->capture_default_str();
        cmd->add_option("--speed-min", p->speed.v_min, "speed range lower bound [NM/h]")->capture_default_str();
        cmd->add_option("--speed-max", p->speed.v_max, "speed range upper bound [NM/h]")->capture_default_str();
        cmd->add_option("--dmin", p->safety_distance, "safety distance D [NM]")->capture_default_str();
        cmd->add_option("--seed", p->seed, "random seed")->capture_default_str();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "output instance file (stdout when omitted)");
        cmd->callback([p, dim, wy, wz, out] {
            p->dimension = parse_dim(*dim);
            p->box.width_y = *wy > 0.0 ? *wy : p->box.width_x;
            p->box.width_z = *wz > 0.0 ? *wz : p->box.width_x;
            p->box.margin = 0.0;
            emit_instance(gen_random(*p), *out);
        });
    }

    // ---- pseudo-random ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("pseudo-random",
                                       "Border-seeded traffic meeting a requested congestion");
        auto p = std::make_shared<PseudoRandomParams>();
        auto dim = std::make_shared<int>(2);
        auto wy = std::make_shared<double>(0.0);
        auto wz = std::make_shared<double>(0.0);
        auto borders = std::make_shared<std::string>("all");
        auto nc = std::make_shared<long long>(0);
        auto pc = std::make_shared<double>(0.0);
        auto maxc = std::make_shared<long long>(0);
        cmd->add_option("--n", p->n, "number of aircraft")->capture_default_str();
        auto* nc_opt = cmd->add_option("--nc", *nc, "requested conflicting pairs");
        auto* pc_opt = cmd->add_option("--pc", *pc, "per-aircraft conflict probability");
        auto* maxc_opt = cmd->add_option("--maxc", *maxc, "conflict cap per aircraft");
        cmd->add_option("--dim", *dim, "2 or 3")->capture_default_str();
        cmd->add_option("--width", p->box.width_x, "sector width [NM]; also sets y and z")->capture_default_str();
        cmd->add_option("--width-y", *wy, "override y width [NM]");
        cmd->add_option("--width-z", *wz, "override z width [NM]");
        cmd->add_option("--margin", p->box.margin, "border band width [NM]")->capture_default_str();
        cmd->add_option("--borders", *borders,
                        "all|north-south|west-east|west-north|north-top|west-top|top-bottom")
            ->capture_default_str();
        cmd->add_option("--speed-min", p->speed.v_min, "speed range lower bound [NM/h]")->capture_default_str();
        cmd->add_option("--speed-max", p->speed.v_max, "speed range upper bound [NM/h]")->capture_default_str();
        cmd->add_option("--max-trials", p->max_trials, "velocity redraws per conflict target")->capture_default_str();
        cmd->add_option("--dmin", p->safety_distance, "safety distance D [NM]")->capture_default_str();
        cmd->add_option("--seed", p->seed, "random seed")->capture_default_str();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "output instance file (stdout when omitted)");
        cmd->callback([p, dim, wy, wz, borders, nc, pc, maxc, nc_opt, pc_opt, maxc_opt, out] {
            p->dimension = parse_dim(*dim);
            p->box.width_y = *wy > 0.0 ? *wy : p->box.width_x;
            p->box.width_z = *wz > 0.0 ? *wz : p->box.width_x;
            p->borders = border_config_from_string(*borders);
            if (nc_opt->count()) p->congestion.n_c = *nc;
            if (pc_opt->count()) p->congestion.p_c = *pc;
            if (maxc_opt->count()) p->congestion.max_c = *maxc;
            const auto resolved = resolve_congestion_params(p->n, p->congestion);
            for (const std::string& w : resolved.warnings) std::cerr << "warning: " << w << "\n";
            emit_instance(gen_pseudorandom(*p), *out);
        });
    }

    // ---- analyze ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("analyze", "Conflict report for an instance file");
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "instance file")->required();
        cmd->add_option("--out", *out, "report file (stdout when omitted)");
        cmd->callback([in, out] {
            const Instance inst = read_instance(*in);
            check_instance(inst);
            write_text(format_report(analyze(inst)), *out);
        });
    }

    // ---- validate ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("validate", "Check a candidate solution for conflicts");
        auto in = std::make_shared<std::string>();
        auto sol = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "instance file")->required();
        cmd->add_option("--solution", *sol, "solution file")->required();
        cmd->add_option("--out", *out, "report file (stdout when omitted)");
        cmd->callback([in, sol, out] {
            const Instance inst = read_instance(*in);
            check_instance(inst);
            const Solution solution = read_solution(*sol);
            const ComplexityReport report = validate_solution(inst, solution);
            std::string text = format_report(report);
            text += std::string("verdict: ") +
                    (report.n_conflicts == 0 ? "conflict-free" : "conflicts-found") + "\n";
            write_text(text, *out);
            if (report.n_conflicts != 0) g_exit = kExitConflictsFound;
        });
    }

    // ---- plot -------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("plot", "Render an instance as SVG");
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto opt = std::make_shared<SvgOptions>();
        auto no_highlight = std::make_shared<bool>(false);
        cmd->add_option("--in", *in, "instance file")->required();
        cmd->add_option("--out", *out, "SVG file (stdout when omitted)");
        cmd->add_flag("--no-highlight", *no_highlight, "do not mark conflicting pairs");
        cmd->add_option("--azimuth", opt->azimuth_deg, "3D view azimuth [deg]")->capture_default_str();
        cmd->add_option("--elevation", opt->elevation_deg, "3D view elevation [deg]")->capture_default_str();
        cmd->add_option("--size", opt->size_px, "canvas size [px]")->capture_default_str();
        cmd->add_option("--arrow-minutes", opt->arrow_minutes, "arrow length in flight minutes")->capture_default_str();
        cmd->callback([in, out, opt, no_highlight] {
            const Instance inst = read_instance(*in);
            check_instance(inst);
            opt->highlight_conflicts = !*no_highlight;
            write_text(render_svg(inst, *opt), *out);
        });
    }

    // ---- sweep ------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("sweep", "Congestion-accuracy sweep over n and density");
        auto cfg = std::make_shared<SweepConfig>();
        auto dim = std::make_shared<int>(2);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--n", cfg->n_values, "aircraft counts")->delimiter(',');
        cmd->add_option("--den", cfg->densities, "conflict densities in (0, 1]")->delimiter(',');
        cmd->add_option("--t", cfg->maxc_offsets, "max_c offsets")->delimiter(',');
        cmd->add_option("--widths", cfg->widths, "sector widths [NM] (dimension default when omitted)")
            ->delimiter(',');
        cmd->add_option("--seeds", cfg->seeds_per_config, "repetitions per configuration")->capture_default_str();
        cmd->add_option("--dim", *dim, "2 or 3")->capture_default_str();
        cmd->add_option("--margin", cfg->margin, "border band width [NM]")->capture_default_str();
        cmd->add_option("--speed-min", cfg->speed.v_min, "speed range lower bound [NM/h]")->capture_default_str();
        cmd->add_option("--speed-max", cfg->speed.v_max, "speed range upper bound [NM/h]")->capture_default_str();
        cmd->add_option("--max-trials", cfg->max_trials, "velocity redraws per conflict target")->capture_default_str();
        cmd->add_option("--dmin", cfg->safety_distance, "safety distance D [NM]")->capture_default_str();
        cmd->add_option("--seed", cfg->master_seed, "master seed")->capture_default_str();
        cmd->add_option("--out", *out, "output prefix for -summary.txt and -log.txt");
        cmd->callback([cfg, dim, out] {
            cfg->dimension = parse_dim(*dim);
            const SweepResult result = run_sweep(*cfg);
            const std::string summary = format_sweep_summary(*cfg, result);
            if (out->empty()) {
                std::cout << summary;
            } else {
                write_text(summary, *out + "-summary.txt");
                write_text(format_sweep_log(*cfg, result), *out + "-log.txt");
                std::cerr << "sweep: " << result.rows.size() << " instances -> " << *out
                          << "-{summary,log}.txt\n";
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidParameter;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParameter;
    } catch (const InfeasibleCongestion& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const MalformedFile& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformedFile;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return g_exit;
}

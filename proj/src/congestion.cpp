#include "tdgen/congestion.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tdgen/errors.hpp"
#include "tdgen/util.hpp"
#include "tdgen/version.hpp"

namespace tdgen {

namespace {

void put(Metadata& m, const char* key, const std::string& value) {
    m.params.emplace_back(key, value);
}
void put(Metadata& m, const char* key, double v) { put(m, key, format_double(v)); }
void put(Metadata& m, const char* key, long long v) { put(m, key, std::to_string(v)); }
void put(Metadata& m, const char* key, int v) { put(m, key, std::to_string(v)); }

enum class Border { West, East, South, North, Bottom, Top };

std::vector<Border> active_borders(BorderConfig config, Dimension dim) {
    const bool three_d = dim == Dimension::ThreeD;
    switch (config) {
        case BorderConfig::AllBorders:
            if (three_d)
                return {Border::West, Border::East, Border::South, Border::North, Border::Bottom,
                        Border::Top};
            return {Border::West, Border::East, Border::South, Border::North};
        case BorderConfig::NorthSouth: return {Border::South, Border::North};
        case BorderConfig::WestEast: return {Border::West, Border::East};
        case BorderConfig::WestNorth: return {Border::West, Border::North};
        case BorderConfig::NorthTop:
            if (!three_d) throw InvalidParameter("border configuration north-top requires 3D");
            return {Border::North, Border::Top};
        case BorderConfig::WestTop:
            if (!three_d) throw InvalidParameter("border configuration west-top requires 3D");
            return {Border::West, Border::Top};
        case BorderConfig::TopBottom:
            if (!three_d) throw InvalidParameter("border configuration top-bottom requires 3D");
            return {Border::Bottom, Border::Top};
    }
    throw InvalidParameter("unknown border configuration");
}

void validate_box(const SectorBox& box, Dimension dim) {
    if (!(box.width_x > 0.0) || !(box.width_y > 0.0) ||
        (dim == Dimension::ThreeD && !(box.width_z > 0.0)))
        throw InvalidParameter("sector box widths must be positive");
    double smallest = std::min(box.width_x, box.width_y);
    if (dim == Dimension::ThreeD) smallest = std::min(smallest, box.width_z);
    if (box.margin < 0.0 || box.margin >= smallest / 2.0)
        throw InvalidParameter("margin must be non-negative and below half the smallest width");
}

PlacementSlot make_slot(Border border, const SectorBox& box, Dimension dim,
                        const SpeedRange& speed, DetRng& rng) {
    const bool three_d = dim == Dimension::ThreeD;
    const double m = box.margin;
    double x_lo = 0.0, x_hi = box.width_x;
    double y_lo = 0.0, y_hi = box.width_y;
    double z_lo = 0.0, z_hi = box.width_z;
    switch (border) {
        case Border::West: x_hi = m; break;
        case Border::East: x_lo = box.width_x - m; break;
        case Border::South: y_hi = m; break;
        case Border::North: y_lo = box.width_y - m; break;
        case Border::Bottom: z_hi = m; break;
        case Border::Top: z_lo = box.width_z - m; break;
    }
    PlacementSlot slot;
    slot.p_hat.x = rng.uniform(x_lo, x_hi);
    slot.p_hat.y = rng.uniform(y_lo, y_hi);
    slot.p_hat.z = three_d ? rng.uniform(z_lo, z_hi) : 0.0;
    // Heading ranges cover the half-plane/half-space aiming inward.
    switch (border) {
        case Border::West: slot.theta = {-90.0, 90.0}; break;
        case Border::East: slot.theta = {90.0, 270.0}; break;
        case Border::South: slot.theta = {0.0, 180.0}; break;
        case Border::North: slot.theta = {180.0, 360.0}; break;
        case Border::Bottom:
        case Border::Top: slot.theta = {0.0, 360.0}; break;
    }
    if (!three_d) {
        slot.phi = {90.0, 90.0};
    } else {
        switch (border) {
            case Border::Bottom: slot.phi = {0.0, 90.0}; break;
            case Border::Top: slot.phi = {90.0, 180.0}; break;
            default: slot.phi = {0.0, 180.0}; break;
        }
    }
    slot.v_min = speed.v_min;
    slot.v_max = speed.v_max;
    return slot;
}

Vec3 assemble_velocity(double v, double theta_deg, double phi_deg) {
    return {v * cos_deg(theta_deg) * sin_deg(phi_deg), v * sin_deg(theta_deg) * sin_deg(phi_deg),
            v * cos_deg(phi_deg)};
}

void validate_speed(const SpeedRange& speed) {
    if (!(speed.v_min > 0.0) || speed.v_max < speed.v_min)
        throw InvalidParameter("speed range must satisfy 0 < v_min <= v_max");
}

}  // namespace

std::string to_string(BorderConfig config) {
    switch (config) {
        case BorderConfig::AllBorders: return "all";
        case BorderConfig::NorthSouth: return "north-south";
        case BorderConfig::WestEast: return "west-east";
        case BorderConfig::WestNorth: return "west-north";
        case BorderConfig::NorthTop: return "north-top";
        case BorderConfig::WestTop: return "west-top";
        case BorderConfig::TopBottom: return "top-bottom";
    }
    return "all";
}

BorderConfig border_config_from_string(const std::string& name) {
    if (name == "all") return BorderConfig::AllBorders;
    if (name == "north-south") return BorderConfig::NorthSouth;
    if (name == "west-east") return BorderConfig::WestEast;
    if (name == "west-north") return BorderConfig::WestNorth;
    if (name == "north-top") return BorderConfig::NorthTop;
    if (name == "west-top") return BorderConfig::WestTop;
    if (name == "top-bottom") return BorderConfig::TopBottom;
    throw InvalidParameter("unknown border configuration \"" + name + "\"");
}

ResolvedCongestion resolve_congestion_params(int n, const CongestionSpec& given) {
    if (n < 2) throw InvalidParameter("congestion: n must be >= 2");
    if (given.p_c && (*given.p_c < 0.0 || *given.p_c > 1.0))
        throw InvalidParameter("congestion: p_c must lie in [0, 1]");
    if (given.max_c && (*given.max_c < 1 || *given.max_c > n - 1))
        throw InvalidParameter("congestion: max_c must lie in [1, n-1]");
    if (given.n_c && *given.n_c < 0) throw InvalidParameter("congestion: n_c must be >= 0");

    ResolvedCongestion r;
    std::optional<long long> nc = given.n_c;
    std::optional<double> pc = given.p_c;
    std::optional<long long> mc = given.max_c;

    // With one or zero members given, fill from the defaults (p_c = 0.5,
    // max_c = n-1) until exactly one member is left to derive.
    if (!mc && !(nc && pc)) mc = n - 1;
    if (!pc && !nc) pc = 0.5;

    const auto expected_nc = [n](double p, long long m) {
        return n * p * (1.0 + static_cast<double>(m)) / 4.0;
    };

    if (!nc) {
        nc = round_half_even(expected_nc(*pc, *mc));
    } else if (!pc) {
        double v = 4.0 * static_cast<double>(*nc) / (n * (1.0 + static_cast<double>(*mc)));
        if (v > 1.0) {
            r.warnings.push_back("derived p_c " + format_double(v) + " clamped to 1");
            v = 1.0;
        }
        pc = v;
    } else if (!mc) {
        if (*pc == 0.0) {
            if (*nc > 0)
                throw InvalidParameter("congestion: p_c = 0 cannot produce n_c > 0");
            mc = n - 1;
        } else {
            const long long m = round_half_even(4.0 * static_cast<double>(*nc) / (n * *pc) - 1.0);
            mc = std::clamp(m, 1LL, static_cast<long long>(n - 1));
            if (*mc != m)
                r.warnings.push_back("derived max_c " + std::to_string(m) + " clamped to " +
                                     std::to_string(*mc) +
                                     "; the triple no longer matches the expectation formula");
        }
    }

    if (2 * *nc > static_cast<long long>(n) * *mc)
        throw InfeasibleCongestion("requested n_c = " + std::to_string(*nc) +
                                   " exceeds the feasible maximum n*max_c/2 = " +
                                   format_double(n * static_cast<double>(*mc) / 2.0));
    if (static_cast<long long>(n) * (*mc + 1) < 4 * *nc)
        r.warnings.push_back("max_c = " + std::to_string(*mc) +
                             " is below the recommended 4*n_c/n - 1 = " +
                             format_double(4.0 * static_cast<double>(*nc) / n - 1.0) +
                             "; the target congestion may be hard to reach");

    r.n_c = *nc;
    r.p_c = *pc;
    r.max_c = *mc;
    return r;
}

std::vector<PlacementSlot> place_initial_positions(int n, const SectorBox& box,
                                                   BorderConfig borders, Dimension dim,
                                                   const SpeedRange& speed, DetRng& rng) {
    if (n < 1) throw InvalidParameter("placement: n must be >= 1");
    validate_box(box, dim);
    validate_speed(speed);
    const std::vector<Border> active = active_borders(borders, dim);
    std::vector<PlacementSlot> slots;
    slots.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Border b = active[rng.below(active.size())];
        slots.push_back(make_slot(b, box, dim, speed, rng));
    }
    return slots;
}

std::vector<PlacementSlot> place_initial_positions(int n, const SectorBox& box,
                                                   BorderConfig borders, Dimension dim,
                                                   const SpeedRange& speed, std::uint64_t seed) {
    DetRng rng(seed);
    return place_initial_positions(n, box, borders, dim, speed, rng);
}

int count_conf(int id, const std::vector<int>& explored_ids, const Instance& inst) {
    std::unordered_map<int, std::size_t> index;
    for (std::size_t k = 0; k < inst.aircraft.size(); ++k) index.emplace(inst.aircraft[k].id, k);
    const auto self = index.find(id);
    if (self == index.end()) throw UnknownId("unknown aircraft id " + std::to_string(id));
    const Aircraft& a = inst.aircraft[self->second];
    int conflicts = 0;
    for (int other : explored_ids) {
        if (other == id) continue;
        const auto it = index.find(other);
        if (it == index.end()) throw UnknownId("unknown aircraft id " + std::to_string(other));
        const Aircraft& b = inst.aircraft[it->second];
        if (cpa(a.p_hat, a.v_hat, b.p_hat, b.v_hat).d_min < inst.safety_distance) ++conflicts;
    }
    return conflicts;
}

Instance gen_pseudorandom(const PseudoRandomParams& params) {
    const int n = params.n;
    if (n < 2) throw InvalidParameter("pseudo-random: n must be >= 2");
    if (params.max_trials < 1) throw InvalidParameter("pseudo-random: max trials must be >= 1");
    if (!(params.safety_distance > 0.0))
        throw InvalidParameter("pseudo-random: safety distance must be positive");
    const ResolvedCongestion spec = resolve_congestion_params(n, params.congestion);

    DetRng rng(params.seed);
    const std::vector<PlacementSlot> slots =
        place_initial_positions(n, params.box, params.borders, params.dimension, params.speed, rng);

    std::vector<Vec3> velocity(n);
    std::vector<bool> explored(n, false);
    std::vector<int> explored_ids;
    int n_explored = 0;
    long long total_conf = 0;
    double p_c = spec.p_c;
    const long long n_c = spec.n_c;
    const long long max_c = spec.max_c;
    const double safety = params.safety_distance;
    bool escalated = false;

    const auto draw_velocity = [&](const PlacementSlot& slot) {
        const double v = rng.uniform(slot.v_min, slot.v_max);
        const double theta = rng.uniform(slot.theta.min_deg, slot.theta.max_deg);
        const double phi = rng.uniform(slot.phi.min_deg, slot.phi.max_deg);
        return assemble_velocity(v, theta, phi);
    };
    const auto conflicts_with_explored = [&](int i, const Vec3& vel) {
        long long count = 0;
        for (int e : explored_ids)
            if (cpa(slots[i].p_hat, vel, slots[e].p_hat, velocity[e]).d_min < safety) ++count;
        return count;
    };

    while (n_explored < n) {
        // Pick a random unexplored aircraft.
        long long skip = static_cast<long long>(rng.below(n - n_explored));
        int i = 0;
        for (;; ++i) {
            if (!explored[i] && skip-- == 0) break;
        }

        Vec3 cand = draw_velocity(slots[i]);
        const long long max_conf =
            std::min<long long>({max_c, n_explored, std::max<long long>(0, n_c - total_conf)});
        long long target = 0;
        if (n_explored != 0) {
            // Force the cap when the remaining aircraft barely suffice to
            // close the conflict deficit at the expected rate.
            const double deficit = static_cast<double>(n_c - total_conf);
            if (std::ceil(deficit / ((static_cast<double>(max_c) + 1.0) / 2.0)) >=
                static_cast<double>(n - n_explored)) {
                target = max_conf;
            } else if (rng.bernoulli(p_c)) {
                if (max_conf >= 1) target = rng.uniform_int(1, max_conf);
            }
        }

        const long long initial_target = target;
        long long count = conflicts_with_explored(i, cand);
        Vec3 best = cand;
        long long best_count = count;
        std::vector<char> tried(static_cast<std::size_t>(max_conf) + 1, 0);
        long long num_trials = 0;
        long long num_targets_tried = 0;
        for (;;) {
            while (num_trials < params.max_trials && count != target) {
                cand = draw_velocity(slots[i]);
                count = conflicts_with_explored(i, cand);
                ++num_trials;
                if (std::llabs(count - initial_target) < std::llabs(best_count - initial_target)) {
                    best = cand;
                    best_count = count;
                }
            }
            if (count == target) break;
            ++num_targets_tried;
            if (target <= max_conf) tried[static_cast<std::size_t>(target)] = 1;
            if (num_targets_tried >= max_conf + 1) {
                // All of {0..max_conf} failed; escalate one unit at a time.
                const long long esc = num_targets_tried;
                if (esc > n_explored) {
                    // No target is attainable; keep the best velocity seen.
                    cand = best;
                    count = best_count;
                    break;
                }
                target = esc;
            } else {
                // Cycle to the untried target closest to the one that just
                // failed, preferring the larger on ties so an unreachable
                // forced target degrades into the next-best conflict count
                // instead of collapsing to zero.
                long long pick = -1;
                for (long long k = 0; k <= max_conf; ++k) {
                    if (tried[static_cast<std::size_t>(k)]) continue;
                    if (pick < 0 || std::llabs(k - target) < std::llabs(pick - target) ||
                        (std::llabs(k - target) == std::llabs(pick - target) && k > pick))
                        pick = k;
                }
                target = pick;
            }
            num_trials = 0;
        }

        velocity[i] = cand;
        if (count > max_conf) escalated = true;
        total_conf += count;
        explored[i] = true;
        explored_ids.push_back(i);
        ++n_explored;
        if (n_explored != n) {
            p_c = std::clamp(4.0 * static_cast<double>(n_c - total_conf) /
                                 (static_cast<double>(n - n_explored) * (1.0 + max_c)),
                             0.0, 1.0);
        }
    }

    Instance inst;
    inst.dimension = params.dimension;
    inst.safety_distance = safety;
    for (int i = 0; i < n; ++i) inst.aircraft.push_back({i, slots[i].p_hat, velocity[i]});

    const long long achieved = static_cast<long long>(detect_conflicts(inst).size());
    if (achieved != total_conf)
        throw std::logic_error("pseudo-random bookkeeping mismatch: counted " +
                               std::to_string(total_conf) + " conflicts, instance has " +
                               std::to_string(achieved));

    Metadata& md = inst.metadata;
    md.scenario = "pseudo-random";
    md.seed = params.seed;
    md.generator_version = kGeneratorVersion;
    md.requested_conflicts = n_c;
    md.achieved_conflicts = achieved;
    md.escalated = escalated;
    put(md, "n", n);
    put(md, "nc", n_c);
    put(md, "pc", spec.p_c);
    put(md, "maxc", max_c);
    put(md, "width-x", params.box.width_x);
    put(md, "width-y", params.box.width_y);
    if (params.dimension == Dimension::ThreeD) put(md, "width-z", params.box.width_z);
    put(md, "margin", params.box.margin);
    put(md, "borders", to_string(params.borders));
    put(md, "speed-min", params.speed.v_min);
    put(md, "speed-max", params.speed.v_max);
    put(md, "max-trials", params.max_trials);
    return inst;
}

Instance gen_random(const RandomParams& params) {
    if (params.n < 1) throw InvalidParameter("random: n must be >= 1");
    validate_box(params.box, params.dimension);
    validate_speed(params.speed);
    if (!(params.safety_distance > 0.0))
        throw InvalidParameter("random: safety distance must be positive");
    if (params.theta.max_deg < params.theta.min_deg || params.phi.max_deg < params.phi.min_deg)
        throw InvalidParameter("random: heading ranges must be non-empty");

    DetRng rng(params.seed);
    const bool three_d = params.dimension == Dimension::ThreeD;
    Instance inst;
    inst.dimension = params.dimension;
    inst.safety_distance = params.safety_distance;
    for (int i = 0; i < params.n; ++i) {
        Vec3 pos{rng.uniform(0.0, params.box.width_x), rng.uniform(0.0, params.box.width_y),
                 three_d ? rng.uniform(0.0, params.box.width_z) : 0.0};
        const double v = rng.uniform(params.speed.v_min, params.speed.v_max);
        const double theta = rng.uniform(params.theta.min_deg, params.theta.max_deg);
        const double phi =
            three_d ? rng.uniform(params.phi.min_deg, params.phi.max_deg) : 90.0;
        inst.aircraft.push_back({i, pos, assemble_velocity(v, theta, phi)});
    }
    Metadata& md = inst.metadata;
    md.scenario = "random";
    md.seed = params.seed;
    md.generator_version = kGeneratorVersion;
    put(md, "n", params.n);
    put(md, "width-x", params.box.width_x);
    put(md, "width-y", params.box.width_y);
    if (three_d) put(md, "width-z", params.box.width_z);
    put(md, "theta-min", params.theta.min_deg);
    put(md, "theta-max", params.theta.max_deg);
    if (three_d) {
        put(md, "phi-min", params.phi.min_deg);
        put(md, "phi-max", params.phi.max_deg);
    }
    put(md, "speed-min", params.speed.v_min);
    put(md, "speed-max", params.speed.v_max);
    return inst;
}

}  // namespace tdgen

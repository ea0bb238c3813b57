#include "tdgen/geometry.hpp"

#include <algorithm>
#include <unordered_set>

#include "tdgen/errors.hpp"

namespace tdgen {

double sin_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0.0) r += 360.0;
    if (r == 0.0 || r == 180.0) return 0.0;
    if (r == 90.0) return 1.0;
    if (r == 270.0) return -1.0;
    return std::sin(deg2rad(r));
}

double cos_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0.0) r += 360.0;
    if (r == 0.0) return 1.0;
    if (r == 90.0 || r == 270.0) return 0.0;
    if (r == 180.0) return -1.0;
    return std::cos(deg2rad(r));
}

Vec3 rotate_z(const Vec3& v, double deg) {
    const double c = cos_deg(deg);
    const double s = sin_deg(deg);
    return {v.x * c - v.y * s, v.x * s + v.y * c, v.z};
}

void check_instance(const Instance& inst) {
    if (inst.aircraft.empty()) throw InvalidParameter("instance must contain at least one aircraft");
    if (!(inst.safety_distance > 0.0))
        throw InvalidParameter("safety distance D must be positive");
    std::unordered_set<int> ids;
    for (const Aircraft& a : inst.aircraft) {
        if (!a.p_hat.finite() || !a.v_hat.finite())
            throw InvalidParameter("aircraft " + std::to_string(a.id) + " has non-finite coordinates");
        if (!(a.v_hat.norm2() > 0.0))
            throw InvalidParameter("aircraft " + std::to_string(a.id) + " has zero velocity");
        if (!ids.insert(a.id).second)
            throw InvalidParameter("duplicate aircraft id " + std::to_string(a.id));
        if (inst.dimension == Dimension::TwoD && (a.p_hat.z != 0.0 || a.v_hat.z != 0.0))
            throw InvalidParameter("aircraft " + std::to_string(a.id) +
                                   " has a nonzero z component in a 2D instance");
    }
}

CpaResult cpa(const Vec3& p_i, const Vec3& v_i, const Vec3& p_j, const Vec3& v_j) {
    const Vec3 dp = p_i - p_j;
    const Vec3 dv = v_i - v_j;
    const double a = dv.norm2();
    if (a == 0.0) return {0.0, dp.norm()};
    double t = -dp.dot(dv) / a;
    if (t < 0.0) t = 0.0;
    return {t, (dp + dv * t).norm()};
}

std::optional<ConflictWindow> conflict_interval(const Vec3& p_i, const Vec3& v_i,
                                                const Vec3& p_j, const Vec3& v_j,
                                                double safety_distance) {
    if (!(safety_distance > 0.0))
        throw InvalidParameter("safety distance D must be positive");
    const Vec3 dp = p_i - p_j;
    const Vec3 dv = v_i - v_j;
    const double a = dv.norm2();
    const double c = dp.norm2() - safety_distance * safety_distance;
    if (a == 0.0) {
        if (c < 0.0) return ConflictWindow{0.0, 0.0, true};
        return std::nullopt;
    }
    const double b = 2.0 * dp.dot(dv);
    const double disc = b * b - 4.0 * a * c;
    if (disc <= 0.0) return std::nullopt;
    // Stable quadratic: sum b with sqrt(disc) of matching sign, then split the
    // roots as q/a and c/q so neither suffers cancellation.
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sq, b));
    const double r1 = q / a;
    const double r2 = c / q;
    const double t1 = std::min(r1, r2);
    const double t2 = std::max(r1, r2);
    if (t2 <= 0.0) return std::nullopt;
    return ConflictWindow{std::max(0.0, t1), t2, false};
}

std::vector<PairConflict> detect_conflicts(const Instance& inst) {
    const double safety = inst.safety_distance;
    const auto& ac = inst.aircraft;
    std::vector<PairConflict> out;
    for (std::size_t a = 0; a < ac.size(); ++a) {
        for (std::size_t b = a + 1; b < ac.size(); ++b) {
            const auto [t, d] = cpa(ac[a].p_hat, ac[a].v_hat, ac[b].p_hat, ac[b].v_hat);
            if (!(d < safety)) continue;
            PairConflict pc;
            pc.i = std::min(ac[a].id, ac[b].id);
            pc.j = std::max(ac[a].id, ac[b].id);
            pc.t_cpa = t;
            pc.d_min = d;
            const auto win = conflict_interval(ac[a].p_hat, ac[a].v_hat, ac[b].p_hat,
                                               ac[b].v_hat, safety);
            if (win && win->unbounded) {
                pc.t_enter = win->t_enter;
                pc.unbounded = true;
            } else if (win) {
                pc.t_enter = win->t_enter;
                pc.t_exit = win->t_exit;
                pc.duration_min = (win->t_exit - win->t_enter) * 60.0;
            } else {
                // d_min sits on the threshold within rounding noise; report a
                // grazing window of zero length at the CPA.
                pc.t_enter = t;
                pc.t_exit = t;
            }
            out.push_back(pc);
        }
    }
    std::sort(out.begin(), out.end(), [](const PairConflict& l, const PairConflict& r) {
        return l.i != r.i ? l.i < r.i : l.j < r.j;
    });
    return out;
}

}  // namespace tdgen

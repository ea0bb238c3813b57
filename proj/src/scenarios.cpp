#include "tdgen/scenarios.hpp"

#include <algorithm>
#include <string>

#include "tdgen/errors.hpp"
#include "tdgen/rng.hpp"
#include "tdgen/util.hpp"
#include "tdgen/version.hpp"

namespace tdgen {

namespace {

void put(Metadata& m, const char* key, const std::string& value) {
    m.params.emplace_back(key, value);
}
void put(Metadata& m, const char* key, double v) { put(m, key, format_double(v)); }
void put(Metadata& m, const char* key, int v) { put(m, key, std::to_string(v)); }

std::string join_doubles(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_double(v[i]);
    }
    return s;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

void require(bool ok, const char* what) {
    if (!ok) throw InvalidParameter(what);
}

// Heading of aircraft i pointing at the origin, optionally deviated. The
// undeviated direction is built from -pos so it passes through the center
// exactly, not through an angle round trip.
Vec3 heading_2d(const Vec3& pos, double radius, double deviation, DetRng& rng) {
    Vec3 dir{-pos.x / radius, -pos.y / radius, 0.0};
    if (deviation > 0.0) dir = rotate_z(dir, rng.uniform(-deviation, deviation));
    return dir;
}

// One rhomboidal layer at height z: m_x trails along +x spaced trail_sep
// apart, m_y trails at slope alpha. The k-th aircraft of every trail starts
// lead + k*aircraft_sep of arc behind the crossing lattice, so with equal
// speeds the k-th aircraft of crossing trails meet exactly at the crossings.
void build_rhomboidal_layer(std::vector<Aircraft>& out, int& next_id, double alpha_deg,
                            int m_x, int n_x, int m_y, int n_y, double trail_sep,
                            double aircraft_sep, double speed, double deviation, double z,
                            DetRng& rng) {
    const double sin_a = sin_deg(alpha_deg);
    const double tan_half = (1.0 - cos_deg(alpha_deg)) / sin_a;  // tan(alpha/2)
    const double anchor_step = trail_sep / sin_a;  // x spacing giving trail_sep across slopping trails
    const double lead = aircraft_sep;

    for (int i = 0; i < m_x; ++i) {
        Vec3 dir{1.0, 0.0, 0.0};
        if (deviation > 0.0) dir = rotate_z(dir, rng.uniform(-deviation, deviation));
        const Vec3 vel = dir * speed;
        const double x0 = -i * trail_sep * tan_half - lead;
        for (int k = 0; k < n_x; ++k)
            out.push_back({next_id++, {x0 - k * aircraft_sep, i * trail_sep, z}, vel});
    }
    const Vec3 axis{cos_deg(alpha_deg), sin_deg(alpha_deg), 0.0};
    for (int j = 0; j < m_y; ++j) {
        Vec3 dir = axis;
        if (deviation > 0.0) dir = rotate_z(dir, rng.uniform(-deviation, deviation));
        const Vec3 vel = dir * speed;
        for (int k = 0; k < n_y; ++k) {
            const double s = -(j * anchor_step + lead + k * aircraft_sep);
            out.push_back({next_id++, Vec3{j * anchor_step, 0.0, z} + axis * s, vel});
        }
    }
}

// Vertical plane at y: m_z parallel trails climbing through the horizontal
// planes at angle beta, same staggering convention as the 2D layers.
void build_vertical_layer(std::vector<Aircraft>& out, int& next_id, double beta_deg, int m_z,
                          int n_z, double trail_sep, double aircraft_sep, double speed,
                          double deviation, double y, DetRng& rng) {
    const double sin_b = sin_deg(beta_deg);
    const double anchor_step = trail_sep / sin_b;
    const double lead = aircraft_sep;
    const Vec3 axis{cos_deg(beta_deg), 0.0, sin_deg(beta_deg)};
    for (int m = 0; m < m_z; ++m) {
        double heading = beta_deg;
        if (deviation > 0.0) heading += rng.uniform(-deviation, deviation);
        const Vec3 dir{cos_deg(heading), 0.0, sin_deg(heading)};
        const Vec3 vel = dir * speed;
        for (int k = 0; k < n_z; ++k) {
            const double s = -(m * anchor_step + lead + k * aircraft_sep);
            out.push_back({next_id++, Vec3{m * anchor_step, y, 0.0} + axis * s, vel});
        }
    }
}

void validate_rhomboidal(const RhomboidalParams& p, bool fixed_alpha) {
    require(p.m_x >= 1 && p.m_y >= 1, "rhomboidal: trail counts m_x, m_y must be >= 1");
    require(p.n_x >= 1 && p.n_y >= 1, "rhomboidal: aircraft counts n_x, n_y must be >= 1");
    if (!fixed_alpha)
        require(p.alpha > 0.0 && p.alpha < 180.0, "rhomboidal: alpha must lie in (0, 180) degrees");
    require(p.trail_sep > 0.0, "rhomboidal: trail separation must be positive");
    require(p.aircraft_sep > 0.0, "rhomboidal: aircraft separation must be positive");
    require(p.speed > 0.0, "rhomboidal: speed must be positive");
    require(p.deviation_range >= 0.0, "rhomboidal: deviation range must be >= 0");
    require(p.safety_distance > 0.0, "rhomboidal: safety distance must be positive");
}

Instance gen_rhomboidal_impl(const RhomboidalParams& p, const char* kind) {
    DetRng rng(p.seed);
    Instance inst;
    inst.dimension = Dimension::TwoD;
    inst.safety_distance = p.safety_distance;
    int next_id = 0;
    build_rhomboidal_layer(inst.aircraft, next_id, p.alpha, p.m_x, p.n_x, p.m_y, p.n_y,
                           p.trail_sep, p.aircraft_sep, p.speed, p.deviation_range, 0.0, rng);
    Metadata& md = inst.metadata;
    md.scenario = kind;
    md.seed = p.seed;
    md.generator_version = kGeneratorVersion;
    put(md, "mx", p.m_x);
    put(md, "my", p.m_y);
    put(md, "nx", p.n_x);
    put(md, "ny", p.n_y);
    put(md, "alpha", p.alpha);
    put(md, "trail-sep", p.trail_sep);
    put(md, "aircraft-sep", p.aircraft_sep);
    put(md, "speed", p.speed);
    put(md, "deviation", p.deviation_range);
    return inst;
}

Instance gen_polyhedral_impl(const PolyhedralParams& p, const char* kind, bool fixed_angles) {
    const int hp = static_cast<int>(p.horizontal.size());
    const int vp = static_cast<int>(p.vertical.size());
    require(hp + vp >= 1, "polyhedral: at least one plane is required");
    long long total = 0;
    for (const auto& h : p.horizontal) {
        if (!fixed_angles)
            require(h.alpha > 0.0 && h.alpha < 180.0, "polyhedral: alpha must lie in (0, 180) degrees");
        require(h.m_x >= 0 && h.m_y >= 0 && h.n_x >= 0 && h.n_y >= 0,
                "polyhedral: per-plane counts must be >= 0");
        total += static_cast<long long>(h.m_x) * h.n_x + static_cast<long long>(h.m_y) * h.n_y;
    }
    for (const auto& v : p.vertical) {
        if (!fixed_angles)
            require(v.beta > 0.0 && v.beta < 180.0, "polyhedral: beta must lie in (0, 180) degrees");
        require(v.m_z >= 0 && v.n_z >= 0, "polyhedral: per-plane counts must be >= 0");
        total += static_cast<long long>(v.m_z) * v.n_z;
    }
    require(total >= 1, "polyhedral: the plane layout yields zero aircraft");
    require(p.plane_sep_h > 0.0 && p.plane_sep_v > 0.0, "polyhedral: plane separations must be positive");
    require(p.trail_sep > 0.0 && p.trail_sep_v > 0.0 && p.aircraft_sep > 0.0,
            "polyhedral: separations must be positive");
    require(p.speed > 0.0, "polyhedral: speed must be positive");
    require(p.deviation_range >= 0.0, "polyhedral: deviation range must be >= 0");
    require(p.safety_distance > 0.0, "polyhedral: safety distance must be positive");

    DetRng rng(p.seed);
    Instance inst;
    inst.dimension = Dimension::ThreeD;
    inst.safety_distance = p.safety_distance;
    int next_id = 0;
    for (int h = 0; h < hp; ++h) {
        const auto& spec = p.horizontal[h];
        build_rhomboidal_layer(inst.aircraft, next_id, spec.alpha, spec.m_x, spec.n_x, spec.m_y,
                               spec.n_y, p.trail_sep, p.aircraft_sep, p.speed, p.deviation_range,
                               h * p.plane_sep_h, rng);
    }
    for (int v = 0; v < vp; ++v) {
        const auto& spec = p.vertical[v];
        build_vertical_layer(inst.aircraft, next_id, spec.beta, spec.m_z, spec.n_z, p.trail_sep_v,
                             p.aircraft_sep, p.speed, p.deviation_range, v * p.plane_sep_v, rng);
    }

    Metadata& md = inst.metadata;
    md.scenario = kind;
    md.seed = p.seed;
    md.generator_version = kGeneratorVersion;
    std::vector<double> alphas, betas;
    std::vector<int> mxs, mys, nxs, nys, mzs, nzs;
    for (const auto& h : p.horizontal) {
        alphas.push_back(h.alpha);
        mxs.push_back(h.m_x);
        mys.push_back(h.m_y);
        nxs.push_back(h.n_x);
        nys.push_back(h.n_y);
    }
    for (const auto& v : p.vertical) {
        betas.push_back(v.beta);
        mzs.push_back(v.m_z);
        nzs.push_back(v.n_z);
    }
    put(md, "hp", hp);
    put(md, "vp", vp);
    if (hp > 0) {
        put(md, "alpha", join_doubles(alphas));
        put(md, "mx", join_ints(mxs));
        put(md, "my", join_ints(mys));
        put(md, "nx", join_ints(nxs));
        put(md, "ny", join_ints(nys));
    }
    if (vp > 0) {
        put(md, "beta", join_doubles(betas));
        put(md, "mz", join_ints(mzs));
        put(md, "nz", join_ints(nzs));
    }
    put(md, "plane-sep-h", p.plane_sep_h);
    put(md, "plane-sep-v", p.plane_sep_v);
    put(md, "trail-sep", p.trail_sep);
    put(md, "trail-sep-v", p.trail_sep_v);
    put(md, "aircraft-sep", p.aircraft_sep);
    put(md, "speed", p.speed);
    put(md, "deviation", p.deviation_range);
    return inst;
}

}  // namespace

Instance gen_circle(const CircleParams& p) {
    require(p.n >= 2, "circle: n must be >= 2");
    require(p.radius > 0.0, "circle: radius must be positive");
    require(p.sector_width > 0.0 && p.sector_width <= 360.0,
            "circle: sector width must lie in (0, 360] degrees");
    require(p.speed > 0.0, "circle: speed must be positive");
    require(p.deviation_range >= 0.0, "circle: deviation range must be >= 0");
    require(p.safety_distance > 0.0, "circle: safety distance must be positive");

    DetRng rng(p.seed);
    Instance inst;
    inst.dimension = Dimension::TwoD;
    inst.safety_distance = p.safety_distance;
    const double step = p.sector_width / p.n;
    for (int k = 0; k < p.n; ++k) {
        const double ang = p.sector_start + step * k;
        const Vec3 pos{p.radius * cos_deg(ang), p.radius * sin_deg(ang), 0.0};
        const Vec3 dir = heading_2d(pos, p.radius, p.deviation_range, rng);
        inst.aircraft.push_back({k, pos, dir * p.speed});
    }
    Metadata& md = inst.metadata;
    md.scenario = "circle";
    md.seed = p.seed;
    md.generator_version = kGeneratorVersion;
    put(md, "n", p.n);
    put(md, "radius", p.radius);
    put(md, "sector-start", p.sector_start);
    put(md, "sector-width", p.sector_width);
    put(md, "speed", p.speed);
    put(md, "deviation", p.deviation_range);
    return inst;
}

Instance gen_sphere(const SphereParams& p) {
    require(p.n >= 2, "sphere: n must be >= 2");
    require(p.radius > 0.0, "sphere: radius must be positive");
    require(p.sector_width > 0.0 && p.sector_width <= 360.0,
            "sphere: sector width must lie in (0, 360] degrees");
    require(p.phi_min >= 0.0 && p.phi_max <= 180.0 && p.phi_min < p.phi_max,
            "sphere: polar bounds must satisfy 0 <= phi_min < phi_max <= 180");
    require(p.speed > 0.0, "sphere: speed must be positive");
    require(p.deviation_range >= 0.0, "sphere: deviation range must be >= 0");
    require(p.safety_distance > 0.0, "sphere: safety distance must be positive");

    DetRng rng(p.seed);
    Instance inst;
    inst.dimension = Dimension::ThreeD;
    inst.safety_distance = p.safety_distance;
    const double c_hi = cos_deg(p.phi_min);  // cos is decreasing: c_hi >= c_lo
    const double c_lo = cos_deg(p.phi_max);
    // Conjugate golden ratio; irrational azimuth increments give the spiral
    // lattice its even coverage.
    const double golden = 0.61803398874989484820;
    for (int k = 0; k < p.n; ++k) {
        double theta, cos_phi;
        if (p.random_placement) {
            theta = rng.uniform(p.sector_start, p.sector_start + p.sector_width);
            cos_phi = rng.uniform(c_lo, c_hi);  // uniform in cos(phi) => uniform on the sphere
        } else {
            const double u = (p.n == 1) ? 0.5 : static_cast<double>(k) / (p.n - 1);
            cos_phi = c_hi + u * (c_lo - c_hi);
            double frac = std::fmod(k * golden, 1.0);
            theta = p.sector_start + p.sector_width * frac;
        }
        const double sin_phi = std::sqrt(std::max(0.0, 1.0 - cos_phi * cos_phi));
        const Vec3 pos{p.radius * sin_phi * cos_deg(theta), p.radius * sin_phi * sin_deg(theta),
                       p.radius * cos_phi};
        Vec3 dir{-pos.x / p.radius, -pos.y / p.radius, -pos.z / p.radius};
        if (p.deviation_range > 0.0) {
            const double th = rad2deg(std::atan2(dir.y, dir.x)) +
                              rng.uniform(-p.deviation_range, p.deviation_range);
            const double ph = std::clamp(rad2deg(std::acos(std::clamp(dir.z, -1.0, 1.0))) +
                                             rng.uniform(-p.deviation_range, p.deviation_range),
                                         0.0, 180.0);
            dir = {cos_deg(th) * sin_deg(ph), sin_deg(th) * sin_deg(ph), cos_deg(ph)};
        }
        inst.aircraft.push_back({k, pos, dir * p.speed});
    }
    Metadata& md = inst.metadata;
    md.scenario = "sphere";
    md.seed = p.seed;
    md.generator_version = kGeneratorVersion;
    put(md, "n", p.n);
    put(md, "radius", p.radius);
    put(md, "sector-start", p.sector_start);
    put(md, "sector-width", p.sector_width);
    put(md, "phi-min", p.phi_min);
    put(md, "phi-max", p.phi_max);
    put(md, "speed", p.speed);
    put(md, "deviation", p.deviation_range);
    put(md, "random-placement", p.random_placement ? "true" : "false");
    return inst;
}

Instance gen_rhomboidal(const RhomboidalParams& p) {
    validate_rhomboidal(p, false);
    return gen_rhomboidal_impl(p, "rhomboidal");
}

Instance gen_grid(RhomboidalParams params) {
    params.alpha = 90.0;
    validate_rhomboidal(params, true);
    return gen_rhomboidal_impl(params, "grid");
}

Instance gen_polyhedral(const PolyhedralParams& p) {
    return gen_polyhedral_impl(p, "polyhedral", false);
}

Instance gen_cubic(PolyhedralParams params) {
    for (auto& h : params.horizontal) h.alpha = 90.0;
    for (auto& v : params.vertical) v.beta = 90.0;
    return gen_polyhedral_impl(params, "cubic", true);
}

}  // namespace tdgen

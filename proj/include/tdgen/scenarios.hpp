#pragma once

#include <cstdint>
#include <vector>

#include "tdgen/geometry.hpp"

namespace tdgen {

inline constexpr double kDefaultSpeed = 480.0;           // [NM/h]
inline constexpr double kDefaultSafetyDistance = 5.0;    // D [NM]

// Aircraft evenly placed on a circle (or circular sector), flying toward the
// center; deviation_range > 0 perturbs each heading by a uniform angle in
// [-deviation_range, +deviation_range].
struct CircleParams {
    int n = 2;
    double radius = 100.0;          // [NM]
    double sector_start = 0.0;      // [deg]
    double sector_width = 360.0;    // [deg]; 360 = whole circle
    double speed = kDefaultSpeed;   // [NM/h]
    double deviation_range = 0.0;   // [deg], half-width
    double safety_distance = kDefaultSafetyDistance;
    std::uint64_t seed = 0;
};

struct SphereParams {
    int n = 2;
    double radius = 100.0;
    double sector_start = 0.0;      // azimuth theta [deg]
    double sector_width = 360.0;
    double phi_min = 0.0;           // polar angle from +z [deg]
    double phi_max = 180.0;
    double speed = kDefaultSpeed;
    double deviation_range = 0.0;   // applied to both theta and phi of each heading
    bool random_placement = false;  // false: spiral lattice; true: uniform sampling
    double safety_distance = kDefaultSafetyDistance;
    std::uint64_t seed = 0;
};

// Two families of straight trails: m_x level trails plus m_y trails at slope
// alpha, n_x / n_y aircraft per trail. Aircraft are staggered so the k-th
// aircraft of every trail reaches the trail crossings simultaneously.
struct RhomboidalParams {
    int m_x = 2;
    int m_y = 2;
    int n_x = 1;
    int n_y = 1;
    double alpha = 120.0;           // [deg], in (0, 180)
    double trail_sep = 30.0;        // [NM] between parallel trails
    double aircraft_sep = 15.0;     // [NM] along one trail
    double speed = kDefaultSpeed;
    double deviation_range = 0.0;   // per-trail heading deviation [deg]
    double safety_distance = kDefaultSafetyDistance;
    std::uint64_t seed = 0;
};

struct HorizontalPlaneSpec {
    double alpha = 120.0;  // [deg]
    int m_x = 2;
    int m_y = 2;
    int n_x = 1;
    int n_y = 1;
};

struct VerticalPlaneSpec {
    double beta = 60.0;  // [deg] angle against the horizontal planes
    int m_z = 2;
    int n_z = 1;
};

// Stacked horizontal rhomboidal layers plus vertical planes of parallel
// slopping trails. One trail separation is shared by every horizontal plane
// and another by every vertical plane; they cannot vary per plane.
struct PolyhedralParams {
    std::vector<HorizontalPlaneSpec> horizontal;
    std::vector<VerticalPlaneSpec> vertical;
    double plane_sep_h = 10.0;  // [NM] z spacing of horizontal planes
    double plane_sep_v = 30.0;  // [NM] y spacing of vertical planes
    double trail_sep = 30.0;    // [NM] between parallel trails, horizontal planes
    double trail_sep_v = 30.0;  // [NM] between parallel trails, vertical planes
    double aircraft_sep = 15.0;
    double speed = kDefaultSpeed;
    double deviation_range = 0.0;
    double safety_distance = kDefaultSafetyDistance;
    std::uint64_t seed = 0;
};

Instance gen_circle(const CircleParams& params);
Instance gen_sphere(const SphereParams& params);
Instance gen_rhomboidal(const RhomboidalParams& params);

// Rhomboidal with alpha forced to 90 degrees.
Instance gen_grid(RhomboidalParams params);

Instance gen_polyhedral(const PolyhedralParams& params);

// Polyhedral with every alpha and beta forced to 90 degrees.
Instance gen_cubic(PolyhedralParams params);

}  // namespace tdgen

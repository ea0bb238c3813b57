#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdgen/geometry.hpp"
#include "tdgen/rng.hpp"
#include "tdgen/scenarios.hpp"

namespace tdgen {

// Congestion controls for pseudo-random generation. Any subset may be given;
// the rest is resolved from E(n_c) = n * p_c * (1 + max_c)/2 * 1/2.
struct CongestionSpec {
    std::optional<long long> n_c;   // total conflicting pairs requested
    std::optional<double> p_c;      // probability an aircraft conflicts with at least one other
    std::optional<long long> max_c; // cap on conflicts per aircraft, in [1, n-1]
};

struct ResolvedCongestion {
    long long n_c = 0;
    double p_c = 0.0;
    long long max_c = 1;
    std::vector<std::string> warnings;
};

// Fills the missing members of the triple (defaults p_c = 0.5, max_c = n-1),
// derives the remaining one from the expected-conflict formula, and enforces
// the hard bound n_c <= n*max_c/2. Fractional results round half to even.
ResolvedCongestion resolve_congestion_params(int n, const CongestionSpec& partial);

// Air sector anchored at the origin: x in [0, width_x], y in [0, width_y],
// and z in [0, width_z] for 3D. Aircraft start inside bands of width margin
// along the selected borders/faces.
struct SectorBox {
    double width_x = 200.0;
    double width_y = 200.0;
    double width_z = 200.0;  // ignored in 2D
    double margin = 10.0;
};

// Which borders (2D) or faces (3D) receive aircraft. North/south faces are
// normal to y, west/east to x, top/bottom to z, the low face sitting on the
// coordinate hyperplane.
enum class BorderConfig {
    AllBorders,
    NorthSouth,
    WestEast,
    WestNorth,
    NorthTop,   // 3D only
    WestTop,    // 3D only
    TopBottom,  // 3D only
};

std::string to_string(BorderConfig config);
BorderConfig border_config_from_string(const std::string& name);

struct AngleRange {
    double min_deg = 0.0;
    double max_deg = 0.0;
};

struct SpeedRange {
    double v_min = 400.0;  // [NM/h]
    double v_max = 500.0;
};

// Starting position plus the heading/speed ranges valid at that position.
struct PlacementSlot {
    Vec3 p_hat;
    AngleRange theta;  // heading against the x axis
    AngleRange phi;    // heading against the z axis; fixed [90, 90] in 2D
    double v_min = 0.0;
    double v_max = 0.0;
};

std::vector<PlacementSlot> place_initial_positions(int n, const SectorBox& box,
                                                   BorderConfig borders, Dimension dim,
                                                   const SpeedRange& speed, std::uint64_t seed);

// Same, drawing from an existing stream (used by gen_pseudorandom so one seed
// drives positions and velocities).
std::vector<PlacementSlot> place_initial_positions(int n, const SectorBox& box,
                                                   BorderConfig borders, Dimension dim,
                                                   const SpeedRange& speed, DetRng& rng);

struct PseudoRandomParams {
    int n = 10;
    CongestionSpec congestion;
    SectorBox box;
    BorderConfig borders = BorderConfig::AllBorders;
    SpeedRange speed;
    int max_trials = 2500;  // velocity redraws per conflict target
    Dimension dimension = Dimension::TwoD;
    double safety_distance = kDefaultSafetyDistance;
    std::uint64_t seed = 0;
};

// Congestion-targeted generation: border placement first, then per-aircraft
// velocity search driving the conflict count toward n_c. Always terminates
// with an instance; a missed target is reported through the metadata
// (requested vs achieved), never raised.
Instance gen_pseudorandom(const PseudoRandomParams& params);

// Conflicts between aircraft id and the listed aircraft (self excluded).
int count_conf(int id, const std::vector<int>& explored_ids, const Instance& inst);

struct RandomParams {
    int n = 10;
    SectorBox box;  // margin unused; positions fill the whole box
    SpeedRange speed;
    AngleRange theta{0.0, 360.0};
    AngleRange phi{0.0, 180.0};  // forced to [90, 90] in 2D
    Dimension dimension = Dimension::TwoD;
    double safety_distance = kDefaultSafetyDistance;
    std::uint64_t seed = 0;
};

// Uncontrolled random traffic in the box.
Instance gen_random(const RandomParams& params);

}  // namespace tdgen

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdgen {

constexpr double kPi = 3.141592653589793238462643383279502884;

constexpr double deg2rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad2deg(double rad) { return rad * (180.0 / kPi); }

// sin/cos taking degrees; exact at multiples of 90 so axis-aligned layouts
// come out with exact zero components.
double sin_deg(double deg);
double cos_deg(double deg);

// Positions in NM, velocities in NM/h.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

// Rotation by deg around the z axis (counterclockwise in the x-y plane).
Vec3 rotate_z(const Vec3& v, double deg);

struct Aircraft {
    int id = 0;
    Vec3 p_hat;  // initial position [NM]
    Vec3 v_hat;  // velocity [NM/h]
};

enum class Dimension { TwoD, ThreeD };

struct Metadata {
    std::string scenario = "custom";
    // Ordered parameter record, sufficient to regenerate the instance.
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t seed = 0;
    std::string generator_version;
    std::optional<long long> requested_conflicts;
    std::optional<long long> achieved_conflicts;
    bool escalated = false;  // per-aircraft conflict cap exceeded during generation
};

struct Instance {
    Dimension dimension = Dimension::TwoD;
    std::vector<Aircraft> aircraft;
    double safety_distance = 5.0;  // D [NM]
    Metadata metadata;

    int size() const { return static_cast<int>(aircraft.size()); }
};

// Throws InvalidParameter when an instance invariant is broken (empty list,
// non-positive D, duplicate ids, non-finite or zero velocities, nonzero z in 2D).
void check_instance(const Instance& inst);

struct CpaResult {
    double t_cpa;  // [h], always >= 0 (future half-line only)
    double d_min;  // [NM]
};

// Closest point of approach for two uniformly moving aircraft. Total on
// finite inputs; t_cpa = 0 when the relative velocity vanishes.
CpaResult cpa(const Vec3& p_i, const Vec3& v_i, const Vec3& p_j, const Vec3& v_j);

struct ConflictWindow {
    double t_enter = 0.0;   // [h]
    double t_exit = 0.0;    // [h]; meaningless when unbounded
    bool unbounded = false; // separation stays below D for all t >= t_enter
};

// Maximal sub-interval of [0, inf) where the pairwise distance is below D.
// Absent when the pair never violates the separation for t >= 0.
std::optional<ConflictWindow> conflict_interval(const Vec3& p_i, const Vec3& v_i,
                                                const Vec3& p_j, const Vec3& v_j,
                                                double safety_distance);

struct PairConflict {
    int i = 0;  // smaller aircraft id
    int j = 0;
    double t_cpa = 0.0;        // [h]
    double d_min = 0.0;        // [NM]
    double t_enter = 0.0;      // [h]
    double t_exit = 0.0;       // [h]; 0 when unbounded
    double duration_min = 0.0; // [min]; 0 when unbounded
    bool unbounded = false;
};

// One entry per unordered pair with d_min < D (strict), sorted by (i, j).
std::vector<PairConflict> detect_conflicts(const Instance& inst);

}  // namespace tdgen

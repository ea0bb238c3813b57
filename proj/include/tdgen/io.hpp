#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "tdgen/analysis.hpp"
#include "tdgen/geometry.hpp"

namespace tdgen {

inline constexpr int kInstanceFormatVersion = 1;

// Text form: a key:value header block, then one "id x y z vx vy vz" row per
// aircraft. parse_instance(render_instance(i)) == i, field-exact.
std::string render_instance(const Instance& inst);
Instance parse_instance(const std::string& text, const std::string& origin = "<memory>");

// Returns the number of bytes written.
std::size_t write_instance(const Instance& inst, const std::filesystem::path& destination);
Instance read_instance(const std::filesystem::path& source);

// A candidate deconfliction: adjusted velocity vectors keyed by aircraft id.
struct Solution {
    std::string instance_ref;  // free-form pointer back to the instance
    std::vector<std::pair<int, Vec3>> velocities;
};

std::string render_solution(const Solution& sol);
Solution parse_solution(const std::string& text, const std::string& origin = "<memory>");
std::size_t write_solution(const Solution& sol, const std::filesystem::path& destination);
Solution read_solution(const std::filesystem::path& source);

// Re-analyzes the instance with the solution's velocities in place of the
// nominal ones. Throws IdMismatch when the id sets differ.
ComplexityReport validate_solution(const Instance& inst, const Solution& sol);

}  // namespace tdgen

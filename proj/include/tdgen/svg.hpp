#pragma once

#include <string>

#include "tdgen/geometry.hpp"

namespace tdgen {

struct SvgOptions {
    double size_px = 720.0;          // canvas edge length
    double margin_px = 48.0;
    bool highlight_conflicts = true; // dashed links between conflicting pairs
    double azimuth_deg = 35.0;       // 3D orthographic view direction
    double elevation_deg = 25.0;
    double arrow_minutes = 6.0;      // arrow length = distance flown in this many minutes
};

// One marker and one velocity arrow per aircraft; byte-identical output for
// equal instance and options. 3D instances are drawn in orthographic
// projection along the configured view direction.
std::string render_svg(const Instance& inst, const SvgOptions& options = {});

}  // namespace tdgen

#include "tdgen/util.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tdgen {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + s.size()) return false;
    if (!std::isfinite(v)) return false;
    out = v;
    return true;
}

bool parse_long(const std::string& s, long long& out) {
    if (s.empty()) return false;
    const char* begin = s.c_str();
    char* end = nullptr;
    long long v = std::strtoll(begin, &end, 10);
    if (end != begin + s.size()) return false;
    out = v;
    return true;
}

long long round_half_even(double x) {
    const double fl = std::floor(x);
    const double frac = x - fl;
    const long long lo = static_cast<long long>(fl);
    if (frac > 0.5) return lo + 1;
    if (frac < 0.5) return lo;
    return (lo % 2 == 0) ? lo : lo + 1;
}

}  // namespace tdgen

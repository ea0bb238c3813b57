#pragma once

#include <string>

namespace tdgen {

// Decimal serialization with 17 significant digits; round-trips IEEE doubles
// exactly through parse_double.
std::string format_double(double v);

// Parses a full string as a double; returns false on trailing garbage,
// empty input, or non-finite results.
bool parse_double(const std::string& s, double& out);

bool parse_long(const std::string& s, long long& out);

// Nearest integer with ties broken toward even, independent of the
// floating-point environment.
long long round_half_even(double x);

}  // namespace tdgen

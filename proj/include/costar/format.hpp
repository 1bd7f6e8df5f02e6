#pragma once

#include <string>

namespace costar {

/// Shortest round-trip decimal text for a double, laid out the way Python's
/// repr() prints floats ("0.007731836633689431", "1.0", "1e-05").
std::string format_double(double value);

}  // namespace costar

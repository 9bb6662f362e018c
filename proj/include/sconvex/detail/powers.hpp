#pragma once

#include <cmath>

namespace sconvex::detail {

// r^e for r >= 0, e > 0, with 0^e = 0.
inline double pow0(double r, double e) { return r == 0.0 ? 0.0 : std::pow(r, e); }

}  // namespace sconvex::detail

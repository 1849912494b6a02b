#pragma once

#include <vector>

#include "vdw/polyarith/int_poly.hpp"

namespace vdw::poly {

struct MahlerMeasure {
  long double value;
  // Certified bound on |value - M(f)|.
  long double error;
  // 0 = long double; 1..4 = successive multiprecision retries.
  int precision_level;
};

// prod max(1, |root|) over the complex roots of f, with certified absolute error <= tol.
// Throws ToleranceUnreachable when no precision level certifies the result.
MahlerMeasure mahler_measure(const MonicIntPoly& f, double tol = 1e-9);

}  // namespace vdw::poly

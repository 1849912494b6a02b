#pragma once

#include <vector>

#include "vdw/core/numtheory.hpp"
#include "vdw/polyarith/int_poly.hpp"

namespace vdw::poly {

// Determinant of the Sylvester matrix with the rows of f first:
// Res(f, g) = lc(f)^deg g * prod g(alpha) over roots alpha of f, so Res(x - a, x - b) = a - b.
// Res(f, 0) = 0; Res(c, g) = c^deg g for a nonzero constant c.
BigInt resultant(const IntPoly& f, const IntPoly& g);
// Same value through reductions modulo word-size primes and CRT, stopping past the Hadamard bound.
BigInt resultant_modular(const IntPoly& f, const IntPoly& g);

// (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg f >= 1.
BigInt discriminant(const IntPoly& f);
BigInt discriminant_modular(const IntPoly& f);
BigInt disc(const MonicIntPoly& f);

// Integer polynomial of degree < xs.size() through (xs[i], ys[i]); throws InvariantViolation if not integral.
IntPoly interpolate_integer(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

// Disc_x(x^n + a_1 x^(n-1) + ... + a_(n-1) x + t) as a polynomial in t, degree n - 1.
IntPoly disc_in_last_coefficient(const std::vector<BigInt>& prefix);
// discriminant of disc_in_last_coefficient(prefix); requires n = prefix.size() + 1 >= 3.
BigInt double_disc(const std::vector<BigInt>& prefix);

}  // namespace vdw::poly

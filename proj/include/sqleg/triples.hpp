#pragma once

#include <vector>

#include "sqleg/arith.hpp"

namespace sqleg {

/// Primitive Pythagorean triple a^2 + b^2 = c^2 with its generators:
/// a = m^2 - n^2 (odd leg), b = 2mn (even leg), c = m^2 + n^2.
struct PrimitiveTriple {
  Natural a, b, c;
  Natural m, n;
};

/// Representation of the leg difference m^2 - n^2 = s * x^2 induced by the
/// split of (m+n, m-n):
///   k = gcd(m+n, m-n) in {1, 2},  x = k * m1 * n1,  d1 * d2 = s,
///   m = k * (d1*m1^2 + d2*n1^2) / 2,  n = k * |d1*m1^2 - d2*n1^2| / 2.
/// k = 2 happens exactly when m and n are both odd; d1 or d2 may then be even.
struct DicksonDecomposition {
  Natural s;
  Natural x;
  Natural k;
  Natural d1, d2;
  Natural m1, n1;
};

/// Requires m > n >= 1, gcd(m, n) = 1, m + n odd.
PrimitiveTriple triple_from_params(const Natural& m, const Natural& n);

/// Exactly all primitive triples with c <= c_max, sorted by (c, a).
std::vector<PrimitiveTriple> generate_primitive_triples(const Natural& c_max);

/// Requires m > n >= 1, gcd(m, n) = 1 (parity unconstrained).
DicksonDecomposition decompose_leg_difference(const Natural& m, const Natural& n);

}  // namespace sqleg

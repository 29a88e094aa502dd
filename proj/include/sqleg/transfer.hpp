#pragma once

#include <utility>
#include <vector>

#include "sqleg/arith.hpp"

namespace sqleg {

/// Solution of (n*x^2)^2 + y^4 = z^2 with gcd(n*x, y) = 1, x, y, z >= 1.
struct QuarticSolution {
  OddSquarefree n;
  Natural x, y, z;
};

/// Solution of d1*w^2 = d2^2*u^4 + d3^2*v^4 with gcd(d2*u, d3*v) = 1 and
/// d1*d2*d3 squarefree. Statement naming; in the proof's subscripts these
/// divisors appear as d1, d3, d4.
struct Eq19Solution {
  OddSquarefree d1, d2, d3;
  Natural w, u, v;
};

/// Throws invalid_input when the type's invariants do not hold.
void validate(const QuarticSolution& sol);
void validate(const Eq19Solution& sol);

enum class DescentCase { none, d2_equals_n, d3_equals_n };

const char* to_string(DescentCase c) noexcept;

/// Intermediate values recovered while decomposing:
///   y^2 = r^2 - t^2, n*x^2 = 2rt, z = r^2 + t^2   (r odd, t even, coprime)
///   R1^2 = (r+y)/2, T1^2 = (r-y)/2 with R1 >= T1, t = 2*R1*T1.
struct DecompositionTrace {
  Natural r, t;
  Natural R1, T1;
  DescentCase descent_case = DescentCase::none;
};

/// Traces a solution of d1*w^2 = d2^2*u^4 + d3^2*v^4 back to one of
/// (n*x^2)^2 + y^4 = z^2 with n = d1*d2*d3:
///   x = 2*w*u*v,  y = |d2^2*u^4 - d3^2*v^4|,  z = d1^2*w^4 + 4*d2^2*d3^2*u^4*v^4.
/// Requires d2*u^2 + d3*v^2 odd, which keeps the lifted solution primitive.
QuarticSolution lift(const Eq19Solution& sol);

/// Inverse direction for x even, y odd: recovers the divisor triple and the
/// inner solution, with lift(first) reproducing the input exactly.
std::pair<Eq19Solution, DecompositionTrace> decompose(const QuarticSolution& sol);

/// One step of the indefinite descent: defined exactly when decompose lands
/// in a descent case (d2 = n or d3 = n), and returns a strictly smaller
/// solution for the same n.
QuarticSolution descent_step(const QuarticSolution& sol);

enum class DivisorStatus { admissible, excluded };
enum class ExclusionReason { survives, theorem3, qr_contradiction };

const char* to_string(DivisorStatus s) noexcept;
const char* to_string(ExclusionReason r) noexcept;

struct DivisorTriple {
  Natural d1, d2, d3;
  DivisorStatus status = DivisorStatus::excluded;
  ExclusionReason reason = ExclusionReason::survives;
};

/// For primes p = 1, q = 5 (mod 8) with p a nonresidue of q: enumerates the
/// ordered triples d1*d2*d3 = p*q with d2 < pq and d3 < pq, and excludes all
/// but (pq, 1, 1) the way the Theorem 4 argument does.
std::vector<DivisorTriple> theorem4_divisors(const Natural& p, const Natural& q);

}  // namespace sqleg

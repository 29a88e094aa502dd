#include "sqleg/transfer.hpp"

#include <algorithm>

#include "sqleg/hypotheses.hpp"

namespace sqleg {

namespace {

Natural pow4(const Natural& v) {
  Natural v2 = v * v;
  return v2 * v2;
}

// Exact square root or a structural violation: the input was not a solution.
Natural exact_root(const Natural& v, const char* what) {
  SqrtResult r = isqrt(v);
  if (!r.exact)
    fail(errc::structural_violation, std::string(what) + " = " + v.str() +
                                         " is not a perfect square; input is not a valid solution");
  return r.root;
}

// Product of the primes of `m` dividing v, as an OddSquarefree.
OddSquarefree prime_part_dividing(const OddSquarefree& m, const Natural& v) {
  Natural d = 1;
  for (const Natural& p : m.factors())
    if (v % p == 0) d *= p;
  return OddSquarefree(d);
}

}  // namespace

void validate(const QuarticSolution& sol) {
  if (sol.x < 1 || sol.y < 1 || sol.z < 1)
    fail(errc::invalid_input, "quartic solution components must be positive");
  Natural lhs = sol.n.value() * sol.x * sol.x;
  if (lhs * lhs + pow4(sol.y) != sol.z * sol.z)
    fail(errc::invalid_input, "(n*x^2)^2 + y^4 = z^2 fails for n=" + sol.n.value().str() +
                                  " x=" + sol.x.str() + " y=" + sol.y.str() + " z=" + sol.z.str());
  if (gcd(sol.n.value() * sol.x, sol.y) != 1)
    fail(errc::invalid_input, "n*x and y must be coprime");
}

void validate(const Eq19Solution& sol) {
  if (sol.w < 1 || sol.u < 1 || sol.v < 1)
    fail(errc::invalid_input, "eq19 solution components must be positive");
  if (gcd(sol.d1.value(), sol.d2.value()) != 1 || gcd(sol.d1.value(), sol.d3.value()) != 1 ||
      gcd(sol.d2.value(), sol.d3.value()) != 1)
    fail(errc::invalid_input, "d1*d2*d3 must be squarefree");
  Natural lhs = sol.d1.value() * sol.w * sol.w;
  Natural rhs = sol.d2.value() * sol.d2.value() * pow4(sol.u) +
                sol.d3.value() * sol.d3.value() * pow4(sol.v);
  if (lhs != rhs)
    fail(errc::invalid_input, "d1*w^2 = d2^2*u^4 + d3^2*v^4 fails: " + lhs.str() +
                                  " != " + rhs.str());
  if (gcd(sol.d2.value() * sol.u, sol.d3.value() * sol.v) != 1)
    fail(errc::invalid_input, "d2*u and d3*v must be coprime");
}

const char* to_string(DescentCase c) noexcept {
  switch (c) {
    case DescentCase::none: return "none";
    case DescentCase::d2_equals_n: return "d2_equals_n";
    case DescentCase::d3_equals_n: return "d3_equals_n";
  }
  return "none";
}

QuarticSolution lift(const Eq19Solution& sol) {
  Natural a = sol.d2.value() * sol.u * sol.u;  // R1 of the traceback
  Natural b = sol.d3.value() * sol.v * sol.v;  // T1 of the traceback
  if (a == b)
    fail(errc::degenerate_y, "d2^2*u^4 = d3^2*v^4 lifts to y = 0");
  if ((a + b) % 2 == 0)
    fail(errc::non_primitive,
         "d2*u^2 + d3*v^2 must be odd; the lifted triple would not be primitive");
  validate(sol);

  OddSquarefree n(sol.d1.value() * sol.d2.value() * sol.d3.value());
  QuarticSolution out{std::move(n), 2 * sol.w * sol.u * sol.v,
                      a > b ? a * a - b * b : b * b - a * a,
                      sol.d1.value() * sol.d1.value() * pow4(sol.w) + 4 * a * a * b * b};
  validate(out);
  return out;
}

std::pair<Eq19Solution, DecompositionTrace> decompose(const QuarticSolution& sol) {
  if (sol.x % 2 == 1)
    fail(errc::parity_unsupported,
         "x is odd; only the x even / y odd case decomposes constructively");
  // Inputs that are not valid solutions are detected structurally below: a
  // required square root comes out inexact, or the final round trip through
  // lift fails to reproduce (x, y, z).
  if (sol.x < 1 || sol.y < 1 || sol.y % 2 == 0 || sol.z % 2 == 0 || sol.z <= sol.y * sol.y)
    fail(errc::structural_violation, "not a solution with x even, y odd, z odd > y^2");

  const Natural& n = sol.n.value();
  Natural y2 = sol.y * sol.y;

  DecompositionTrace trace;
  trace.r = exact_root((sol.z + y2) / 2, "(z + y^2)/2");
  trace.t = exact_root((sol.z - y2) / 2, "(z - y^2)/2");
  if (gcd(trace.r, trace.t) != 1 || trace.r % 2 != 1 || trace.t % 2 != 0)
    fail(errc::structural_violation, "legs r, t are not coprime of the expected parity");

  OddSquarefree d1 = prime_part_dividing(sol.n, trace.r);
  Natural w = exact_root(trace.r / d1.value(), "r/d1");
  OddSquarefree c(n / d1.value());  // the proof's d2 = d3*d4, carried by t

  trace.R1 = exact_root((trace.r + sol.y) / 2, "(r + y)/2");
  trace.T1 = exact_root((trace.r - sol.y) / 2, "(r - y)/2");
  if (trace.t != 2 * trace.R1 * trace.T1)
    fail(errc::structural_violation, "t = 2*R1*T1 fails");

  OddSquarefree d2 = prime_part_dividing(c, trace.R1);
  Natural u = exact_root(trace.R1 / d2.value(), "R1/d2");
  OddSquarefree d3(c.value() / d2.value());
  Natural v = exact_root(trace.T1 / d3.value(), "T1/d3");

  Eq19Solution inner{std::move(d1), std::move(d2), std::move(d3), std::move(w), std::move(u),
                     std::move(v)};
  validate(inner);

  QuarticSolution relift = lift(inner);
  if (relift.x != sol.x || relift.y != sol.y || relift.z != sol.z)
    fail(errc::structural_violation, "round trip through lift does not reproduce the input");

  if (inner.d2.value() == n)
    trace.descent_case = DescentCase::d2_equals_n;
  else if (inner.d3.value() == n)
    trace.descent_case = DescentCase::d3_equals_n;
  return {std::move(inner), std::move(trace)};
}

QuarticSolution descent_step(const QuarticSolution& sol) {
  auto [inner, trace] = decompose(sol);
  if (trace.descent_case == DescentCase::none)
    fail(errc::not_descent_case, "divisors (" + inner.d1.value().str() + "," +
                                     inner.d2.value().str() + "," + inner.d3.value().str() +
                                     ") do not admit a descent step");

  // d2 = n forces d1 = d3 = 1, so w^2 = (n*u^2)^2 + v^4; symmetrically for d3.
  QuarticSolution next{sol.n,
                       trace.descent_case == DescentCase::d2_equals_n ? inner.u : inner.v,
                       trace.descent_case == DescentCase::d2_equals_n ? inner.v : inner.u,
                       inner.w};
  validate(next);
  if (next.z >= sol.z) fail(errc::structural_violation, "descent did not decrease z");
  return next;
}

const char* to_string(DivisorStatus s) noexcept {
  return s == DivisorStatus::admissible ? "admissible" : "excluded";
}

const char* to_string(ExclusionReason r) noexcept {
  switch (r) {
    case ExclusionReason::survives: return "survives";
    case ExclusionReason::theorem3: return "theorem3";
    case ExclusionReason::qr_contradiction: return "qr_contradiction";
  }
  return "survives";
}

std::vector<DivisorTriple> theorem4_divisors(const Natural& p, const Natural& q) {
  if (!check_theorem4(p, q))
    fail(errc::hypothesis_not_satisfied,
         "need primes p = 1, q = 5 (mod 8) with p a nonresidue of q; got p=" + p.str() +
             " q=" + q.str());

  Natural n = p * q;
  std::vector<DivisorTriple> out;
  for (const Natural& d1 : divisors(OddSquarefree(n))) {
    OddSquarefree rest(n / d1);
    for (const auto& [d2, d3] : ordered_splits(rest)) {
      if (d2 == n || d3 == n) continue;  // the theorem requires d2 < n and d3 < n
      DivisorTriple row{d1, d2, d3, DivisorStatus::excluded, ExclusionReason::survives};
      if (d1 == n) {
        row.status = DivisorStatus::admissible;
      } else if (d1 == 1) {
        // z^2 = p^2*x^4 + q^2*y^4 with gcd(p*x, q*y) = 1: impossible by Theorem 3.
        row.reason = ExclusionReason::theorem3;
      } else {
        // d1 is p or q; the remaining equation forces p to be a residue of q.
        row.reason = ExclusionReason::qr_contradiction;
      }
      out.push_back(std::move(row));
    }
  }
  std::sort(out.begin(), out.end(), [](const DivisorTriple& a, const DivisorTriple& b) {
    if (a.d1 != b.d1) return a.d1 < b.d1;
    return a.d2 < b.d2;
  });
  return out;
}

}  // namespace sqleg

#include "sqleg/triples.hpp"

#include <algorithm>

namespace sqleg {

namespace {

void require_generator_pair(const Natural& m, const Natural& n, bool parity_matters) {
  if (n < 1 || m <= n)
    fail(errc::bad_params, "generators must satisfy m > n >= 1, got m=" + m.str() + " n=" + n.str());
  if (gcd(m, n) != 1)
    fail(errc::bad_params, "generators must be coprime, got m=" + m.str() + " n=" + n.str());
  if (parity_matters && (m + n) % 2 == 0)
    fail(errc::bad_params, "m + n must be odd, got m=" + m.str() + " n=" + n.str());
}

}  // namespace

PrimitiveTriple triple_from_params(const Natural& m, const Natural& n) {
  require_generator_pair(m, n, /*parity_matters=*/true);
  Natural m2 = m * m, n2 = n * n;
  return PrimitiveTriple{m2 - n2, 2 * m * n, m2 + n2, m, n};
}

std::vector<PrimitiveTriple> generate_primitive_triples(const Natural& c_max) {
  std::vector<PrimitiveTriple> out;
  for (Natural n = 1; 2 * n * n < c_max; ++n) {
    for (Natural m = n + 1; m * m + n * n <= c_max; ++m) {
      if ((m + n) % 2 == 0 || gcd(m, n) != 1) continue;
      out.push_back(triple_from_params(m, n));
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimitiveTriple& lhs, const PrimitiveTriple& rhs) {
    return lhs.c != rhs.c ? lhs.c < rhs.c : lhs.a < rhs.a;
  });
  return out;
}

DicksonDecomposition decompose_leg_difference(const Natural& m, const Natural& n) {
  require_generator_pair(m, n, /*parity_matters=*/false);
  DicksonDecomposition dd;
  // gcd(m+n, m-n) divides 2*gcd(m, n) = 2, so k is 1 or 2.
  dd.k = gcd(m + n, m - n);
  Natural sum_part = (m + n) / dd.k;
  Natural diff_part = (m - n) / dd.k;
  SquarefreePart a = squarefree_part(sum_part);
  SquarefreePart b = squarefree_part(diff_part);
  dd.d1 = a.s;
  dd.m1 = a.f;
  dd.d2 = b.s;
  dd.n1 = b.f;
  dd.s = dd.d1 * dd.d2;  // sum_part and diff_part are coprime
  dd.x = dd.k * dd.m1 * dd.n1;
  return dd;
}

}  // namespace sqleg

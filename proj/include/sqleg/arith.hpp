#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

#include "sqleg/errors.hpp"

namespace sqleg {

/// Arbitrary-precision integer. All arithmetic is exact; values handled by
/// this library are nonnegative.
using Natural = boost::multiprecision::cpp_int;

/// Complete prime factorization, primes strictly increasing, exponents >= 1.
struct Factorization {
  std::vector<std::pair<Natural, unsigned>> prime_powers;

  Natural value() const;
  bool squarefree() const;
};

/// Decomposition a = s * f^2 with s squarefree.
struct SquarefreePart {
  Natural s;
  Natural f;
};

struct SqrtResult {
  Natural root;  // floor(sqrt(a))
  bool exact;    // root * root == a
};

Natural gcd(const Natural& a, const Natural& b);
SqrtResult isqrt(const Natural& a);
Factorization factorize(const Natural& a);
SquarefreePart squarefree_part(const Natural& a);

/// Miller-Rabin with a fixed base set; deterministic for n < 3.3e24.
bool is_prime(const Natural& n);

/// Legendre symbol (a|p) for an odd prime p, by Euler's criterion.
int legendre(const Natural& a, const Natural& p);

/// Jacobi symbol (a|m) for odd m >= 1.
int jacobi(const Natural& a, const Natural& m);

int mod8(const Natural& v);

/// Validated odd squarefree positive integer with its distinct prime factors.
/// Every theorem hypothesis in this library starts from such a modulus, so
/// validation happens once, here, at the boundary.
class OddSquarefree {
 public:
  explicit OddSquarefree(Natural value);

  const Natural& value() const noexcept { return value_; }
  const std::vector<Natural>& factors() const noexcept { return factors_; }
  int mod8() const { return sqleg::mod8(value_); }

  friend bool operator==(const OddSquarefree& a, const OddSquarefree& b) {
    return a.value_ == b.value_;
  }

 private:
  Natural value_;
  std::vector<Natural> factors_;
};

/// True iff a is a quadratic residue modulo m, decided prime-by-prime.
/// Jacobi(a, m) = +1 does not certify this for composite m.
/// Requires gcd(a, m) = 1; vacuously true for m = 1.
bool is_qr_mod_odd_squarefree(const Natural& a, const OddSquarefree& m);

/// All divisors of m, ascending.
std::vector<Natural> divisors(const OddSquarefree& m);

/// All ordered splits (d1, d2) with d1 * d2 = m, ascending by d1.
std::vector<std::pair<Natural, Natural>> ordered_splits(const OddSquarefree& m);

/// Unordered splits (s1, s2), s1 <= s2, ascending by s1; (1, m) included.
std::vector<std::pair<Natural, Natural>> unordered_splits(const OddSquarefree& m);

/// Primes <= limit via sieve. Intended for generator scans at desk scale.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace sqleg

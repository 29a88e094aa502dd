#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sqleg/arith.hpp"

namespace sqleg {

/// Per-condition verdicts for the Theorem 1 hypothesis on a pair (s1, s2):
///   (a) both odd squarefree positive integers;
///   (b) s1*s2 = one prime = 5 (mod 8) times primes = 1 (mod 8), at least two
///       primes in total, with s1, s2 coprime and both > 1;
///   (c) the one of s1, s2 that is = 1 (mod 8) is a quadratic nonresidue of
///       every divisor d > 1 of the other.
/// Violations are reported, never thrown, so the inputs are raw integers.
struct Theorem1Report {
  Natural s1, s2;
  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;
  bool satisfied = false;
  std::optional<Natural> witness;  // divisor on which condition (c) fails
};

struct Theorem2Split {
  Natural s1, s2;  // s1 <= s2, s1 * s2 = n
  int s1_mod8 = 0;
  int s2_mod8 = 0;
  bool ok = false;  // residues are {1, 5} mod 8, one of each
};

/// Full split table for the Theorem 2 hypothesis on n: every unordered
/// factorization n = s1 * s2 (including (1, n)) must have residues {1, 5}.
struct Theorem2Report {
  OddSquarefree n;
  std::vector<Theorem2Split> splits;
  bool satisfied = false;
};

Theorem1Report check_theorem1(const Natural& s1, const Natural& s2);

Theorem2Report check_theorem2(const OddSquarefree& n);

/// Closed-form equivalent of check_theorem2: every prime factor of n is
/// = 1 or 5 (mod 8) and the number of factors = 5 (mod 8) is odd.
bool characterize_theorem2(const OddSquarefree& n);

/// p, q distinct primes, both = 1 (mod 4), p a nonresidue of q.
bool check_theorem3(const Natural& p, const Natural& q);

/// p, q distinct primes, p = 1 and q = 5 (mod 8), p a nonresidue of q.
bool check_theorem4(const Natural& p, const Natural& q);

/// All pairs (s1, s2) with s1 * s2 <= limit matching one of the example
/// family shapes and passing check_theorem1, sorted by (s1 * s2, s1):
///   1: s1, s2 primes, s1 = 1, s2 = 5 (mod 8);
///   2: s1 = p1*p2 with p1, p2 = 1 (mod 8) prime, s2 prime, exactly one of
///      p1, p2 a nonresidue of s2;
///   3: s1 prime = 1 (mod 8), s2 = p1*p2 with p1 = 1, p2 = 5 (mod 8) prime,
///      s1 a nonresidue of both;
///   4: s1 a product of an odd number (>= 3) of primes = 1 (mod 8), s2 prime
///      = 5 (mod 8), an even number of the factors residues of s2.
std::vector<std::pair<Natural, Natural>> generate_theorem1_pairs(const Natural& limit, int family);

/// All odd squarefree n <= limit with check_theorem2 satisfied, ascending.
std::vector<OddSquarefree> generate_theorem2_moduli(const Natural& limit);

}  // namespace sqleg

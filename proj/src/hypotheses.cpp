#include "sqleg/hypotheses.hpp"

#include <algorithm>
#include <functional>

namespace sqleg {

namespace {

bool is_odd_squarefree(const Natural& v) {
  return v >= 1 && v % 2 == 1 && factorize(v).squarefree();
}

// Shape of condition (b): one prime = 5 (mod 8), the rest = 1 (mod 8),
// at least two primes, squarefree product (which covers coprimality).
bool product_shape_ok(const Factorization& f) {
  if (!f.squarefree()) return false;
  std::size_t fives = 0;
  for (const auto& [p, e] : f.prime_powers) {
    int r = mod8(p);
    if (r == 5)
      ++fives;
    else if (r != 1)
      return false;
  }
  return fives == 1 && f.prime_powers.size() >= 2;
}

}  // namespace

Theorem1Report check_theorem1(const Natural& s1, const Natural& s2) {
  Theorem1Report rep;
  rep.s1 = s1;
  rep.s2 = s2;
  rep.cond_a = is_odd_squarefree(s1) && is_odd_squarefree(s2);

  if (s1 >= 1 && s2 >= 1) {
    rep.cond_b = s1 > 1 && s2 > 1 && product_shape_ok(factorize(s1 * s2));
  }

  // Condition (c) needs well-defined roles: exactly one of the two = 1 (mod 8),
  // both valid odd squarefree moduli, and coprime so the residue test applies.
  if (rep.cond_a && gcd(s1, s2) == 1 && (mod8(s1) == 1) != (mod8(s2) == 1)) {
    const Natural& s = mod8(s1) == 1 ? s1 : s2;
    OddSquarefree companion(mod8(s1) == 1 ? s2 : s1);
    rep.cond_c = true;
    for (const Natural& d : divisors(companion)) {
      if (d == 1) continue;
      if (is_qr_mod_odd_squarefree(s, OddSquarefree(d))) {
        rep.cond_c = false;
        rep.witness = d;
        break;
      }
    }
  }

  rep.satisfied = rep.cond_a && rep.cond_b && rep.cond_c;
  return rep;
}

Theorem2Report check_theorem2(const OddSquarefree& n) {
  Theorem2Report rep{n, {}, true};
  for (const auto& [a, b] : unordered_splits(n)) {
    Theorem2Split split;
    split.s1 = a;
    split.s2 = b;
    split.s1_mod8 = mod8(a);
    split.s2_mod8 = mod8(b);
    split.ok = (split.s1_mod8 == 1 && split.s2_mod8 == 5) ||
               (split.s1_mod8 == 5 && split.s2_mod8 == 1);
    rep.satisfied = rep.satisfied && split.ok;
    rep.splits.push_back(std::move(split));
  }
  return rep;
}

bool characterize_theorem2(const OddSquarefree& n) {
  std::size_t fives = 0;
  for (const Natural& p : n.factors()) {
    int r = mod8(p);
    if (r == 5)
      ++fives;
    else if (r != 1)
      return false;
  }
  return fives % 2 == 1;
}

bool check_theorem3(const Natural& p, const Natural& q) {
  return p != q && p % 4 == 1 && q % 4 == 1 && is_prime(p) && is_prime(q) &&
         legendre(p, q) == -1;
}

bool check_theorem4(const Natural& p, const Natural& q) {
  return p != q && mod8(p) == 1 && mod8(q) == 5 && is_prime(p) && is_prime(q) &&
         legendre(p, q) == -1;
}

std::vector<std::pair<Natural, Natural>> generate_theorem1_pairs(const Natural& limit,
                                                                 int family) {
  if (family < 1 || family > 4)
    fail(errc::bad_family, "family must be 1..4, got " + std::to_string(family));

  std::vector<std::pair<Natural, Natural>> out;
  if (limit < 85) return out;  // smallest qualifying product is 17 * 5

  // Every prime involved is multiplied by a companion >= 5.
  Natural sieve_bound = limit / 5;
  if (sieve_bound > 100'000'000)
    fail(errc::invalid_input, "pair generation limit too large: " + limit.str());
  std::vector<Natural> ones, fives;
  for (std::uint64_t p : primes_up_to(sieve_bound.convert_to<std::uint64_t>())) {
    if (p % 8 == 1) ones.emplace_back(p);
    if (p % 8 == 5) fives.emplace_back(p);
  }

  auto emit = [&](const Natural& s1, const Natural& s2) {
    if (check_theorem1(s1, s2).satisfied) out.emplace_back(s1, s2);
  };

  switch (family) {
    case 1:
      for (const Natural& a : ones) {
        for (const Natural& b : fives) {
          if (a * b > limit) break;
          if (legendre(a, b) == -1) emit(a, b);
        }
      }
      break;
    case 2:
      for (std::size_t i = 0; i < ones.size(); ++i) {
        for (std::size_t j = i + 1; j < ones.size(); ++j) {
          Natural s1 = ones[i] * ones[j];
          if (s1 * 5 > limit) break;
          for (const Natural& s2 : fives) {
            if (s1 * s2 > limit) break;
            if ((legendre(ones[i], s2) == -1) != (legendre(ones[j], s2) == -1)) emit(s1, s2);
          }
        }
      }
      break;
    case 3:
      for (const Natural& s1 : ones) {
        for (const Natural& p1 : ones) {
          if (p1 == s1) continue;
          if (s1 * p1 * 5 > limit) break;
          for (const Natural& p2 : fives) {
            if (s1 * p1 * p2 > limit) break;
            if (legendre(s1, p1) == -1 && legendre(s1, p2) == -1) emit(s1, p1 * p2);
          }
        }
      }
      break;
    case 4:
      for (const Natural& s2 : fives) {
        std::function<void(std::size_t, const Natural&, int, int)> extend =
            [&](std::size_t start, const Natural& prod, int count, int residues) {
              if (count >= 3 && count % 2 == 1 && residues % 2 == 0) emit(prod, s2);
              for (std::size_t i = start; i < ones.size(); ++i) {
                if (prod * ones[i] * s2 > limit) break;
                extend(i + 1, prod * ones[i], count + 1,
                       residues + (legendre(ones[i], s2) == 1 ? 1 : 0));
              }
            };
        extend(0, Natural(1), 0, 0);
      }
      break;
  }

  std::sort(out.begin(), out.end(), [](const auto& lhs, const auto& rhs) {
    Natural lp = lhs.first * lhs.second, rp = rhs.first * rhs.second;
    return lp != rp ? lp < rp : lhs.first < rhs.first;
  });
  return out;
}

std::vector<OddSquarefree> generate_theorem2_moduli(const Natural& limit) {
  std::vector<OddSquarefree> out;
  for (Natural v = 1; v <= limit; v += 2) {
    if (!factorize(v).squarefree()) continue;
    OddSquarefree n(v);
    if (check_theorem2(n).satisfied) out.push_back(std::move(n));
  }
  return out;
}

}  // namespace sqleg

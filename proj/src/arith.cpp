#include "sqleg/arith.hpp"

#include <algorithm>
#include <map>

namespace sqleg {

namespace {

constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialDivisionLimit; j += i)
        composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
  }();
  return primes;
}

constexpr std::uint32_t kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// true iff a witnesses compositeness of n (n odd, n - 1 = d * 2^r, d odd)
bool mr_witness(const Natural& n, const Natural& a, const Natural& d, unsigned r) {
  Natural x = boost::multiprecision::powm(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

// n odd composite with no prime factor <= kTrialDivisionLimit
Natural pollard_rho(const Natural& n) {
  for (Natural c = 1;; ++c) {
    Natural x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(x > y ? Natural(x - y) : Natural(y - x), n);
    }
    if (d != n) return d;
  }
}

void split_cofactor(const Natural& n, std::map<Natural, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  Natural d = pollard_rho(n);
  split_cofactor(d, acc);
  split_cofactor(n / d, acc);
}

}  // namespace

Natural Factorization::value() const {
  Natural v = 1;
  for (const auto& [p, e] : prime_powers) v *= boost::multiprecision::pow(p, e);
  return v;
}

bool Factorization::squarefree() const {
  return std::all_of(prime_powers.begin(), prime_powers.end(),
                     [](const auto& pe) { return pe.second == 1; });
}

Natural gcd(const Natural& a, const Natural& b) { return boost::multiprecision::gcd(a, b); }

SqrtResult isqrt(const Natural& a) {
  Natural rem;
  Natural root = boost::multiprecision::sqrt(a, rem);
  return {root, rem == 0};
}

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  for (std::uint32_t p : kMillerRabinBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Natural d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint32_t a : kMillerRabinBases) {
    if (mr_witness(n, Natural(a), d, r)) return false;
  }
  return true;
}

Factorization factorize(const Natural& a) {
  if (a == 0) fail(errc::zero_input, "factorize: input must be positive");
  Factorization out;
  Natural n = a;
  bool trial_complete = false;
  for (std::uint32_t p : trial_primes()) {
    if (Natural(p) * p > n) {
      trial_complete = true;
      break;
    }
    if (n % p == 0) {
      unsigned e = 0;
      do {
        n /= p;
        ++e;
      } while (n % p == 0);
      out.prime_powers.emplace_back(Natural(p), e);
    }
  }
  if (n > 1) {
    if (trial_complete) {
      out.prime_powers.emplace_back(n, 1);
    } else {
      std::map<Natural, unsigned> acc;
      split_cofactor(n, acc);
      for (const auto& [p, e] : acc) out.prime_powers.emplace_back(p, e);
    }
  }
  return out;
}

SquarefreePart squarefree_part(const Natural& a) {
  if (a == 0) fail(errc::zero_input, "squarefree_part: input must be positive");
  SquarefreePart result{1, 1};
  for (const auto& [p, e] : factorize(a).prime_powers) {
    if (e % 2 == 1) result.s *= p;
    result.f *= boost::multiprecision::pow(p, e / 2);
  }
  return result;
}

int legendre(const Natural& a, const Natural& p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    fail(errc::not_odd_prime, "legendre: modulus must be an odd prime, got " + p.str());
  Natural r = boost::multiprecision::powm(a % p, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

int jacobi(const Natural& a_in, const Natural& m_in) {
  if (m_in % 2 == 0) fail(errc::even_modulus, "jacobi: modulus must be odd, got " + m_in.str());
  Natural a = a_in % m_in;
  Natural m = m_in;
  int sign = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int m8 = mod8(m);
      if (m8 == 3 || m8 == 5) sign = -sign;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) sign = -sign;
    a %= m;
  }
  return m == 1 ? sign : 0;
}

int mod8(const Natural& v) { return (v % 8).convert_to<int>(); }

OddSquarefree::OddSquarefree(Natural value) : value_(std::move(value)) {
  if (value_ < 1 || value_ % 2 == 0)
    fail(errc::not_odd_squarefree, "expected an odd positive integer, got " + value_.str());
  Factorization f = factorize(value_);
  if (!f.squarefree())
    fail(errc::not_odd_squarefree, value_.str() + " is not squarefree");
  factors_.reserve(f.prime_powers.size());
  for (auto& [p, e] : f.prime_powers) factors_.push_back(p);
}

bool is_qr_mod_odd_squarefree(const Natural& a, const OddSquarefree& m) {
  if (gcd(a, m.value()) != 1)
    fail(errc::not_coprime, a.str() + " is not coprime to the modulus " + m.value().str());
  for (const Natural& p : m.factors()) {
    if (legendre(a, p) != 1) return false;
  }
  return true;
}

std::vector<Natural> divisors(const OddSquarefree& m) {
  std::vector<Natural> out{Natural(1)};
  for (const Natural& p : m.factors()) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Natural, Natural>> ordered_splits(const OddSquarefree& m) {
  std::vector<std::pair<Natural, Natural>> out;
  for (const Natural& d : divisors(m)) out.emplace_back(d, m.value() / d);
  return out;
}

std::vector<std::pair<Natural, Natural>> unordered_splits(const OddSquarefree& m) {
  std::vector<std::pair<Natural, Natural>> out;
  for (const Natural& d : divisors(m)) {
    Natural q = m.value() / d;
    if (d <= q) out.emplace_back(d, q);
  }
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit > 100'000'000)
    fail(errc::invalid_input, "sieve limit too large: " + std::to_string(limit));
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::zero_input: return "ZeroInput";
    case errc::not_odd_prime: return "NotOddPrime";
    case errc::even_modulus: return "EvenModulus";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_odd_squarefree: return "NotOddSquarefree";
    case errc::bad_params: return "BadParams";
    case errc::bad_family: return "BadFamily";
    case errc::bad_modulus: return "BadModulus";
    case errc::bad_primes: return "BadPrimes";
    case errc::non_primitive: return "NonPrimitive";
    case errc::degenerate_y: return "DegenerateY";
    case errc::invalid_input: return "InvalidInput";
    case errc::parity_unsupported: return "ParityUnsupported";
    case errc::structural_violation: return "StructuralViolation";
    case errc::not_descent_case: return "NotDescentCase";
    case errc::hypothesis_not_satisfied: return "HypothesisNotSatisfied";
  }
  return "UnknownError";
}

}  // namespace sqleg

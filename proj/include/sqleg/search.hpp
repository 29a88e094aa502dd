#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqleg/arith.hpp"

namespace sqleg {

enum class EquationId { eq1, eq19 };
enum class SearchOutcome { exhausted, counterexample };

const char* to_string(EquationId id) noexcept;
const char* to_string(SearchOutcome o) noexcept;

struct Witness {
  Natural x, y, z;
};

/// Reproducible record of a bounded scan: either the region holds no solution
/// or this is the least counterexample in x-major lexicographic order.
/// `scanned` counts the (x, y) pairs inside the bound that satisfy the gcd
/// precondition, independent of outcome and of worker count.
struct SearchCertificate {
  EquationId equation = EquationId::eq1;
  std::vector<Natural> params;
  Natural bound;
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<Witness> witness;
  std::uint64_t scanned = 0;
  std::uint64_t elapsed_ms = 0;
  unsigned workers = 1;
};

/// Scan of (s1*x^2)^2 + (s2*y^2)^2 = z^2 over 1 <= x, y <= bound with
/// gcd(s1*x, s2*y) = 1.
SearchCertificate search_eq1(const OddSquarefree& s1, const OddSquarefree& s2,
                             const Natural& bound, unsigned workers = 1);

/// Scan of d1*z^2 = d2^2*x^4 + d3^2*y^4 over 1 <= x, y <= bound with
/// gcd(d2*x, d3*y) = 1.
SearchCertificate search_eq19(const OddSquarefree& d1, const OddSquarefree& d2,
                              const OddSquarefree& d3, const Natural& bound,
                              unsigned workers = 1);

}  // namespace sqleg

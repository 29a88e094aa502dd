#include "sqleg/caseaudit.hpp"

#include <cstdint>
#include <string>

#include "helpers.hpp"
#include "sqleg/hypotheses.hpp"

using namespace sqleg;
using sqleg::testing::code_of;

namespace {

std::size_t count(const CaseAuditReport& rep, Refutation r) {
  std::size_t n = 0;
  for (const CaseRow& row : rep.rows) n += row.refutation == r ? 1 : 0;
  return n;
}

// Independent re-derivation of the mod-8 verdict for a Theorem 1 row:
// exhaust every residue assignment with plain integers.
bool row_mod8_satisfiable(int d1, int d2, int dl1, int dl2, bool eq4) {
  for (int m1 = 1; m1 < 8; m1 += 2) {
    for (int n1 = 1; n1 < 8; n1 += 2) {
      for (int M = 0; M < 8; ++M) {
        for (int N = 0; N < 8; ++N) {
          if (eq4 && N % 2 == 0) continue;   // n = delta2 * N^2 odd
          if (!eq4 && M % 2 == 0) continue;  // m = delta1 * M^2 odd
          int diff = d1 * m1 * m1 - d2 * n1 * n1;
          int sum = d1 * m1 * m1 + d2 * n1 * n1;
          int lhs_diff = (eq4 ? 2 : 4) * dl2 * N * N;
          int lhs_sum = (eq4 ? 4 : 2) * dl1 * M * M;
          bool diff_ok = (lhs_diff - diff) % 8 == 0 || (lhs_diff + diff) % 8 == 0;
          bool sum_ok = (lhs_sum - sum) % 8 == 0;
          if (diff_ok && sum_ok) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("audit_theorem1 on the qualifying pair (17, 5)") {
  CaseAuditReport rep = audit_theorem1(OddSquarefree(17), OddSquarefree(5));
  CHECK(rep.all_refuted);
  // 2 splits of 17 x 2 splits of 5 x 2 subcases, for both parity orientations
  CHECK(rep.rows.size() == 16);

  // orientation with the leg modulus = 5 (mod 8) dies on congruences alone;
  // the other needs the residue deductions, split by the value of delta2
  for (const CaseRow& row : rep.rows) {
    REQUIRE(row.even_split.has_value());
    if (row.case_id.starts_with("x-even")) {
      CHECK(row.refutation == Refutation::mod8);
    } else if (row.refutation != Refutation::mod8) {
      if (row.even_split->second == 5) CHECK(row.refutation == Refutation::qr_submodulus);
      if (row.even_split->second == 1) CHECK(row.refutation == Refutation::qr_full);
    }
  }
  CHECK(count(rep, Refutation::qr_submodulus) == 2);
  CHECK(count(rep, Refutation::qr_full) == 2);
  CHECK(count(rep, Refutation::mod8) == 12);
}

TEST_CASE("audit_theorem1 on (5, 17): the given orientation is congruence-only") {
  CaseAuditReport rep = audit_theorem1(OddSquarefree(5), OddSquarefree(17));
  CHECK(rep.all_refuted);
  for (const CaseRow& row : rep.rows) {
    if (row.case_id.starts_with("x-odd")) CHECK(row.refutation == Refutation::mod8);
  }
}

TEST_CASE("audit_theorem1 on (13, 17): hypothesis fails and rows stay open") {
  // 13 is a residue mod 17, so the residue deductions cannot fire
  CHECK(legendre(13, 17) == 1);
  CaseAuditReport rep = audit_theorem1(OddSquarefree(13), OddSquarefree(17));
  CHECK_FALSE(rep.all_refuted);
  CHECK(count(rep, Refutation::open) > 0);
  CHECK_FALSE(check_theorem1(13, 17).satisfied);
}

TEST_CASE("audit_theorem1 mod-8 verdicts match an independent enumeration") {
  auto verify = [](const Natural& a, const Natural& b) {
    CaseAuditReport rep = audit_theorem1(OddSquarefree(a), OddSquarefree(b));
    for (const CaseRow& row : rep.rows) {
      bool eq4 = row.case_id.ends_with("eq4");
      bool sat = row_mod8_satisfiable(mod8(row.leg_split->first), mod8(row.leg_split->second),
                                      mod8(row.even_split->first), mod8(row.even_split->second),
                                      eq4);
      CHECK((row.refutation == Refutation::mod8) == !sat);
    }
  };
  verify(17, 5);
  verify(5, 17);
  verify(13, 17);
  verify(73, 85);
  verify(105, 1);
}

TEST_CASE("audit_theorem1 refutes every generated qualifying pair") {
  for (int family = 1; family <= 3; ++family) {
    for (const auto& [a, b] : generate_theorem1_pairs(2000, family)) {
      CHECK(audit_theorem1(OddSquarefree(a), OddSquarefree(b)).all_refuted);
    }
  }
}

TEST_CASE("audit_theorem2_case1 examples") {
  CaseAuditReport rep = audit_theorem2_case1(OddSquarefree(5));
  CHECK(rep.all_refuted);
  REQUIRE(rep.rows.size() == 2);  // one subcase row plus the single split (1, 5)
  CHECK(rep.rows[0].refutation == Refutation::mod8);
  CHECK(rep.rows[1].refutation == Refutation::mod8);
  CHECK_FALSE(rep.notes.empty());

  rep = audit_theorem2_case1(OddSquarefree(65));
  CHECK_FALSE(rep.all_refuted);
  bool open_1_65 = false;
  for (const CaseRow& row : rep.rows) {
    if (row.leg_split && row.leg_split->first == 1 && row.leg_split->second == 65)
      open_1_65 = row.refutation == Refutation::open;
  }
  CHECK(open_1_65);

  CHECK(code_of([] { audit_theorem2_case1(OddSquarefree(1)); }) == errc::bad_modulus);
}

TEST_CASE("audit_theorem2_case1 refutes every qualifying modulus up to 1e4") {
  for (const OddSquarefree& n : generate_theorem2_moduli(10'000)) {
    CaseAuditReport rep = audit_theorem2_case1(n);
    CHECK(rep.all_refuted);
    // every split of a qualifying n sums to 6 (mod 8), never 2
    CHECK(rep.rows.size() == unordered_splits(n).size() + 1);
  }
}

TEST_CASE("audit_theorem3 examples") {
  CaseAuditReport rep = audit_theorem3(5, 13);
  CHECK(rep.all_refuted);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].refutation == Refutation::qr_submodulus);
  CHECK(rep.rows[1].refutation == Refutation::qr_submodulus);

  rep = audit_theorem3(13, 17);
  CHECK_FALSE(rep.all_refuted);
  CHECK(count(rep, Refutation::open) == 2);

  CHECK(code_of([] { audit_theorem3(5, 7); }) == errc::bad_primes);
  CHECK(code_of([] { audit_theorem3(5, 5); }) == errc::bad_primes);
  CHECK(code_of([] { audit_theorem3(21, 13); }) == errc::bad_primes);
}

TEST_CASE("audit_theorem3 refutes exactly the qualifying prime pairs below 500") {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p : primes_up_to(499))
    if (p % 4 == 1) ps.push_back(p);
  for (std::uint64_t p : ps) {
    for (std::uint64_t q : ps) {
      if (p == q) continue;
      CHECK(audit_theorem3(p, q).all_refuted == check_theorem3(p, q));
    }
  }
}

TEST_CASE("open rows imply an unsatisfied hypothesis") {
  for (std::uint64_t a = 1; a <= 60; a += 2) {
    for (std::uint64_t b = 1; b <= 60; b += 2) {
      if (!factorize(a).squarefree() || !factorize(b).squarefree()) continue;
      CaseAuditReport rep = audit_theorem1(OddSquarefree(a), OddSquarefree(b));
      if (!rep.all_refuted) CHECK_FALSE(check_theorem1(a, b).satisfied);
    }
  }
}

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqleg/arith.hpp"

namespace sqleg {

enum class Refutation { mod8, qr_submodulus, qr_full, open };

const char* to_string(Refutation r) noexcept;

/// One proof branch: a divisor split with a subcase, and how (or whether)
/// that branch is refuted.
struct CaseRow {
  std::string case_id;
  std::optional<std::pair<Natural, Natural>> leg_split;   // (d1, d2)
  std::optional<std::pair<Natural, Natural>> even_split;  // (delta1, delta2)
  Refutation refutation = Refutation::open;
  std::string detail;
};

struct CaseAuditReport {
  std::vector<CaseRow> rows;
  bool all_refuted = false;  // no row left open
  std::vector<std::string> notes;
};

/// Mechanizes the Theorem 1 proof: for both parity orientations (x odd uses
/// the pair as given, x even swaps the roles of s1 and s2), every ordered
/// split d1*d2 of the odd-leg modulus and delta1*delta2 of the even-leg
/// modulus is crossed with the two even-leg subcases
///   m = 2*delta1*M^2, n = delta2*N^2      (N odd)
///   m = delta1*M^2,   n = 2*delta2*N^2    (M odd)
/// and each branch is refuted by brute-force unsatisfiability of its
/// congruence pair mod 8, or else by the quadratic-residue deduction against
/// delta2 (or against the full companion modulus when delta2 = 1).
CaseAuditReport audit_theorem1(const OddSquarefree& s1, const OddSquarefree& s2);

/// Mechanizes Case 1 (x odd, y even) of the Theorem 2 proof: the branch
/// r = 2R^2, t = T^2 against the mod-8 image of n*x^2 = 4R^4 - T^4, and for
/// each split s1*s2 = n the branch r = R^2, t = 2T^2 against
/// 2R^2 = s1*R1^2 + s2*T1^2. Records, per split, whether the second leg
/// equation is mod-8 consistent (it carries no refutation for qualifying n).
CaseAuditReport audit_theorem2_case1(const OddSquarefree& n);

/// Mechanizes the Theorem 3 proof: both branches of the even-leg split
/// (m = q*m1^2 and n = 2*q*n1^2) force p to be a quadratic residue of q,
/// refuted exactly when legendre(p, q) = -1.
CaseAuditReport audit_theorem3(const Natural& p, const Natural& q);

}  // namespace sqleg

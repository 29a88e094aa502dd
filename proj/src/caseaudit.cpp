#include "sqleg/caseaudit.hpp"

#include <array>

namespace sqleg {

namespace {

constexpr std::array<int, 4> kOdd = {1, 3, 5, 7};
constexpr std::array<int, 8> kAny = {0, 1, 2, 3, 4, 5, 6, 7};

// Subcase shapes shared by Eqs (7) and (9): the even-leg equations are
//   diff_coeff * delta2 * N^2 = +/-(d1*m1^2 - d2*n1^2)   (mod 8)
//   sum_coeff  * delta1 * M^2 =   d1*m1^2 + d2*n1^2      (mod 8)
// with m1, n1 always odd, and the unknown multiplying the even part of the
// generator pair unrestricted.
struct Subcase {
  const char* name;
  int diff_coeff;
  int sum_coeff;
  bool n_restricted_odd;
  bool m_restricted_odd;
};

constexpr Subcase kEq4{"eq4", 2, 4, true, false};
constexpr Subcase kEq5{"eq5", 4, 2, false, true};

bool theorem1_branch_satisfiable(int d1, int d2, int dl1, int dl2, const Subcase& sub) {
  auto span_n = sub.n_restricted_odd ? std::vector<int>(kOdd.begin(), kOdd.end())
                                     : std::vector<int>(kAny.begin(), kAny.end());
  auto span_m = sub.m_restricted_odd ? std::vector<int>(kOdd.begin(), kOdd.end())
                                     : std::vector<int>(kAny.begin(), kAny.end());
  for (int m1 : kOdd) {
    for (int n1 : kOdd) {
      int diff = ((d1 * m1 * m1 - d2 * n1 * n1) % 8 + 8) % 8;
      int sum = (d1 * m1 * m1 + d2 * n1 * n1) % 8;
      for (int N : span_n) {
        int lhs = (sub.diff_coeff * dl2 * N * N) % 8;
        if (lhs != diff && lhs != (8 - diff) % 8) continue;
        for (int M : span_m) {
          if ((sub.sum_coeff * dl1 * M * M) % 8 == sum) return true;
        }
      }
    }
  }
  return false;
}

std::string pair_text(const Natural& a, const Natural& b) {
  return "(" + a.str() + "," + b.str() + ")";
}

CaseRow theorem1_row(const std::string& orientation, const OddSquarefree& leg,
                     const OddSquarefree& even, const Natural& d1, const Natural& d2,
                     const Natural& dl1, const Natural& dl2, const Subcase& sub) {
  CaseRow row;
  row.case_id = orientation + " d=" + pair_text(d1, d2) + " delta=" + pair_text(dl1, dl2) +
                " " + sub.name;
  row.leg_split = {d1, d2};
  row.even_split = {dl1, dl2};

  bool sat = theorem1_branch_satisfiable(mod8(d1), mod8(d2), mod8(dl1), mod8(dl2), sub);
  if (!sat) {
    row.refutation = Refutation::mod8;
    row.detail = "no residue assignment satisfies " + std::to_string(sub.diff_coeff) + "*" +
                 dl2.str() + "*N^2 = +/-(" + d1.str() + "*m1^2 - " + d2.str() + "*n1^2) and " +
                 std::to_string(sub.sum_coeff) + "*" + dl1.str() + "*M^2 = " + d1.str() +
                 "*m1^2 + " + d2.str() + "*n1^2 (mod 8)";
    return row;
  }

  const Natural& s = leg.value();
  if (dl2 > 1) {
    if (gcd(s, dl2) == 1 && !is_qr_mod_odd_squarefree(s, OddSquarefree(dl2))) {
      row.refutation = Refutation::qr_submodulus;
      row.detail = "branch forces " + s.str() + " to be a quadratic residue of delta2 = " +
                   dl2.str() + ", but it is a nonresidue";
      return row;
    }
  } else {
    if (gcd(s, even.value()) == 1 && !is_qr_mod_odd_squarefree(s, even)) {
      row.refutation = Refutation::qr_full;
      row.detail = "branch forces -" + s.str() + ", hence " + s.str() +
                   " (as -1 is a residue), to be a quadratic residue of " + even.value().str() +
                   ", but it is a nonresidue";
      return row;
    }
  }

  row.refutation = Refutation::open;
  row.detail = "no mod-8 or quadratic-residue contradiction found";
  return row;
}

}  // namespace

const char* to_string(Refutation r) noexcept {
  switch (r) {
    case Refutation::mod8: return "MOD8";
    case Refutation::qr_submodulus: return "QR_SUBMODULUS";
    case Refutation::qr_full: return "QR_FULL";
    case Refutation::open: return "OPEN";
  }
  return "OPEN";
}

CaseAuditReport audit_theorem1(const OddSquarefree& s1, const OddSquarefree& s2) {
  CaseAuditReport report;
  report.all_refuted = true;

  struct Orientation {
    const char* label;
    const OddSquarefree* leg;   // modulus on the m^2 - n^2 leg
    const OddSquarefree* even;  // modulus on the 2mn leg
  };
  // x even / y odd is the x odd / y even treatment with the roles swapped.
  const Orientation orientations[] = {{"x-odd", &s1, &s2}, {"x-even", &s2, &s1}};

  for (const Orientation& o : orientations) {
    for (const auto& [d1, d2] : ordered_splits(*o.leg)) {
      for (const auto& [dl1, dl2] : ordered_splits(*o.even)) {
        for (const Subcase* sub : {&kEq4, &kEq5}) {
          CaseRow row = theorem1_row(o.label, *o.leg, *o.even, d1, d2, dl1, dl2, *sub);
          report.all_refuted = report.all_refuted && row.refutation != Refutation::open;
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
  return report;
}

CaseAuditReport audit_theorem2_case1(const OddSquarefree& n) {
  if (n.value() < 3) fail(errc::bad_modulus, "modulus must be an odd integer >= 3");

  CaseAuditReport report;
  report.all_refuted = true;
  int n8 = n.mod8();

  {
    // Branch r = 2R^2, t = T^2: n*x^2 = 4R^4 - T^4 (mod 8), x and T odd.
    CaseRow row;
    row.case_id = "x-odd r=2R^2,t=T^2";
    bool sat = false;
    for (int R : kAny) {
      int rhs = ((4 * R * R * R * R - 1) % 8 + 8) % 8;  // T odd, so T^4 = 1
      if (rhs == n8) sat = true;                        // x odd, so n*x^2 = n
    }
    if (sat) {
      row.refutation = Refutation::open;
      row.detail = "n = " + std::to_string(n8) + " (mod 8) is reachable as 4R^4 - T^4";
    } else {
      row.refutation = Refutation::mod8;
      row.detail = "n*x^2 = 4R^4 - T^4 (mod 8) needs n = 3 or 7 (mod 8); n = " +
                   std::to_string(n8);
    }
    report.all_refuted = report.all_refuted && row.refutation != Refutation::open;
    report.rows.push_back(std::move(row));
  }

  for (const auto& [a, b] : unordered_splits(n)) {
    // Branch r = R^2, t = 2T^2 under the split s1 = a, s2 = b:
    //   2R^2 = a*R1^2 + b*T1^2,  4T^2 = +/-(a*R1^2 - b*T1^2)   (mod 8)
    // with R, R1, T1 odd and T unrestricted.
    int a8 = mod8(a), b8 = mod8(b);
    bool joint_sat = false;
    bool second_sat = false;
    for (int r1 : kOdd) {
      for (int t1 : kOdd) {
        int sum = (a8 * r1 * r1 + b8 * t1 * t1) % 8;
        int diff = ((a8 * r1 * r1 - b8 * t1 * t1) % 8 + 8) % 8;
        bool first = false;
        for (int R : kOdd)
          if ((2 * R * R) % 8 == sum) first = true;
        bool second = false;
        for (int T : kAny) {
          int lhs = (4 * T * T) % 8;
          if (lhs == diff || lhs == (8 - diff) % 8) second = true;
        }
        second_sat = second_sat || second;
        joint_sat = joint_sat || (first && second);
      }
    }
    CaseRow row;
    row.case_id = "x-odd r=R^2,t=2T^2 split=" + pair_text(a, b);
    row.leg_split = {a, b};
    if (joint_sat) {
      row.refutation = Refutation::open;
      row.detail = "s1 + s2 = " + std::to_string((a8 + b8) % 8) +
                   " = 2 (mod 8); no congruence contradiction";
    } else {
      row.refutation = Refutation::mod8;
      row.detail = "2R^2 = " + a.str() + "*R1^2 + " + b.str() +
                   "*T1^2 (mod 8) requires s1 + s2 = 2 (mod 8), but s1 + s2 = " +
                   std::to_string((a8 + b8) % 8);
    }
    report.all_refuted = report.all_refuted && row.refutation != Refutation::open;
    report.rows.push_back(std::move(row));
    report.notes.push_back("split=" + pair_text(a, b) + ": second leg equation 4T^2 = +/-(" +
                           a.str() + "*R1^2 - " + b.str() + "*T1^2) (mod 8) is " +
                           (second_sat ? "consistent; it refutes nothing" : "inconsistent"));
  }
  return report;
}

CaseAuditReport audit_theorem3(const Natural& p, const Natural& q) {
  if (p == q || p % 4 != 1 || q % 4 != 1 || !is_prime(p) || !is_prime(q))
    fail(errc::bad_primes, "expected distinct primes p = q = 1 (mod 4), got p=" + p.str() +
                               " q=" + q.str());

  CaseAuditReport report;
  report.all_refuted = true;
  int sym = legendre(p, q);

  auto make_row = [&](const std::string& branch, const std::string& forced) {
    CaseRow row;
    row.case_id = branch;
    if (sym == -1) {
      row.refutation = Refutation::qr_submodulus;
      row.detail = forced + " forces p to be a quadratic residue of q, but legendre(" +
                   p.str() + "," + q.str() + ") = -1";
    } else {
      row.refutation = Refutation::open;
      row.detail = "legendre(" + p.str() + "," + q.str() +
                   ") = +1; the residue deduction yields no contradiction";
    }
    report.all_refuted = report.all_refuted && row.refutation != Refutation::open;
    report.rows.push_back(std::move(row));
  };

  make_row("m=q*m1^2,n=2*n1^2", "p*x^2 = -n^2 (mod q), with -1 a residue of q,");
  make_row("m=m1^2,n=2*q*n1^2", "p*x^2 = m^2 (mod q)");
  return report;
}

}  // namespace sqleg

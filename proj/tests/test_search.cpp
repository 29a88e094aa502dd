#include "sqleg/search.hpp"

#include <cstdint>

#include "helpers.hpp"
#include "sqleg/hypotheses.hpp"
#include "sqleg/serialize.hpp"

using namespace sqleg;

namespace {

// Straight-line single-threaded rescan used to replay certificates.
struct Replay {
  std::uint64_t scanned = 0;
  std::optional<Witness> witness;
};

Replay replay_eq1(std::uint64_t s1, std::uint64_t s2, std::uint64_t bound) {
  Replay rep;
  for (std::uint64_t x = 1; x <= bound; ++x) {
    for (std::uint64_t y = 1; y <= bound; ++y) {
      if (gcd(Natural(s1) * x, Natural(s2) * y) != 1) continue;
      ++rep.scanned;
      if (rep.witness) continue;
      Natural lx = Natural(s1) * x * x, ly = Natural(s2) * y * y;
      SqrtResult r = isqrt(lx * lx + ly * ly);
      if (r.exact) rep.witness = Witness{x, y, r.root};
    }
  }
  return rep;
}

Replay replay_eq19(std::uint64_t d1, std::uint64_t d2, std::uint64_t d3, std::uint64_t bound) {
  Replay rep;
  for (std::uint64_t x = 1; x <= bound; ++x) {
    for (std::uint64_t y = 1; y <= bound; ++y) {
      if (gcd(Natural(d2) * x, Natural(d3) * y) != 1) continue;
      ++rep.scanned;
      if (rep.witness) continue;
      Natural x2 = Natural(x) * x, y2 = Natural(y) * y;
      Natural num = Natural(d2) * d2 * x2 * x2 + Natural(d3) * d3 * y2 * y2;
      if (num % d1 != 0) continue;
      SqrtResult r = isqrt(num / d1);
      if (r.exact) rep.witness = Witness{x, y, r.root};
    }
  }
  return rep;
}

}  // namespace

TEST_CASE("search_eq1 finds the least counterexample for (3, 1)") {
  SearchCertificate cert = search_eq1(OddSquarefree(3), OddSquarefree(1), 5);
  CHECK(cert.outcome == SearchOutcome::counterexample);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->x == 1);
  CHECK(cert.witness->y == 2);
  CHECK(cert.witness->z == 5);
  // substitution: (3*1)^2 + (1*4)^2 = 9 + 16 = 25
  CHECK(Natural(9) + 16 == cert.witness->z * cert.witness->z);
}

TEST_CASE("search_eq1 exhausts Theorem 1 and classical instances") {
  SearchCertificate cert = search_eq1(OddSquarefree(17), OddSquarefree(5), 200, 4);
  CHECK(cert.outcome == SearchOutcome::exhausted);
  CHECK_FALSE(cert.witness.has_value());

  CHECK(search_eq1(OddSquarefree(1), OddSquarefree(1), 10).outcome ==
        SearchOutcome::exhausted);
}

TEST_CASE("search_eq19 examples") {
  SearchCertificate cert = search_eq19(OddSquarefree(17), OddSquarefree(1), OddSquarefree(1), 5);
  CHECK(cert.outcome == SearchOutcome::counterexample);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->x == 1);
  CHECK(cert.witness->y == 2);
  CHECK(cert.witness->z == 1);

  // fourth powers are 0 or 1 mod 5, so x^4 + y^4 = 0 (mod 5) needs 5 | gcd(x, y)
  CHECK(search_eq19(OddSquarefree(5), OddSquarefree(1), OddSquarefree(1), 500).outcome ==
        SearchOutcome::exhausted);

  CHECK(search_eq19(OddSquarefree(1), OddSquarefree(1), OddSquarefree(1), 10).outcome ==
        SearchOutcome::exhausted);
}

TEST_CASE("certificates replay under an independent rescan") {
  struct Case {
    std::uint64_t s1, s2, bound;
  };
  for (Case c : {Case{3, 1, 5}, Case{3, 1, 60}, Case{17, 5, 60}, Case{1, 1, 40}}) {
    SearchCertificate cert = search_eq1(OddSquarefree(c.s1), OddSquarefree(c.s2), c.bound, 3);
    Replay rep = replay_eq1(c.s1, c.s2, c.bound);
    CHECK(cert.scanned == rep.scanned);
    CHECK(cert.witness.has_value() == rep.witness.has_value());
    if (cert.witness && rep.witness) {
      CHECK(cert.witness->x == rep.witness->x);
      CHECK(cert.witness->y == rep.witness->y);
      CHECK(cert.witness->z == rep.witness->z);
      // counterexamples validate by substitution
      Natural lx = Natural(c.s1) * cert.witness->x * cert.witness->x;
      Natural ly = Natural(c.s2) * cert.witness->y * cert.witness->y;
      CHECK(lx * lx + ly * ly == cert.witness->z * cert.witness->z);
      CHECK(gcd(Natural(c.s1) * cert.witness->x, Natural(c.s2) * cert.witness->y) == 1);
    }
  }
}

TEST_CASE("eq19 certificates replay under an independent rescan") {
  struct Case {
    std::uint64_t d1, d2, d3, bound;
  };
  for (Case c : {Case{17, 1, 1, 40}, Case{1, 3, 1, 40}, Case{5, 1, 1, 60}, Case{15, 1, 1, 30}}) {
    SearchCertificate cert = search_eq19(OddSquarefree(c.d1), OddSquarefree(c.d2),
                                         OddSquarefree(c.d3), c.bound, 3);
    Replay rep = replay_eq19(c.d1, c.d2, c.d3, c.bound);
    CHECK(cert.scanned == rep.scanned);
    CHECK(cert.witness.has_value() == rep.witness.has_value());
    if (cert.witness && rep.witness) {
      CHECK(cert.witness->x == rep.witness->x);
      CHECK(cert.witness->y == rep.witness->y);
      CHECK(cert.witness->z == rep.witness->z);
      Natural x2 = cert.witness->x * cert.witness->x;
      Natural y2 = cert.witness->y * cert.witness->y;
      CHECK(Natural(c.d1) * cert.witness->z * cert.witness->z ==
            Natural(c.d2) * c.d2 * x2 * x2 + Natural(c.d3) * c.d3 * y2 * y2);
    }
  }
}

TEST_CASE("certificates are deterministic across worker counts") {
  for (unsigned workers : {1u, 2u, 8u}) {
    SearchCertificate cert = search_eq1(OddSquarefree(3), OddSquarefree(1), 30, workers);
    CHECK(cert.outcome == SearchOutcome::counterexample);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->x == 1);
    CHECK(cert.witness->y == 2);
    CHECK(cert.scanned == search_eq1(OddSquarefree(3), OddSquarefree(1), 30, 1).scanned);

    SearchCertificate c19 =
        search_eq19(OddSquarefree(17), OddSquarefree(1), OddSquarefree(1), 40, workers);
    CHECK(c19.witness->x == 1);
    CHECK(c19.witness->y == 2);
    CHECK(c19.scanned ==
          search_eq19(OddSquarefree(17), OddSquarefree(1), OddSquarefree(1), 40, 1).scanned);
  }
}

TEST_CASE("counterexamples are monotone in the bound") {
  SearchCertificate small = search_eq1(OddSquarefree(3), OddSquarefree(1), 5);
  SearchCertificate large = search_eq1(OddSquarefree(3), OddSquarefree(1), 80, 5);
  REQUIRE(small.witness.has_value());
  REQUIRE(large.witness.has_value());
  CHECK(small.witness->x == large.witness->x);
  CHECK(small.witness->y == large.witness->y);
  CHECK(small.witness->z == large.witness->z);
}

TEST_CASE("scanned counts gcd-passing pairs regardless of outcome") {
  // all pairs with gcd(3x, y) = 1 in the 5 x 5 box
  std::uint64_t expected = 0;
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= 5; ++y)
      if (gcd(3 * x, y) == 1) ++expected;
  CHECK(search_eq1(OddSquarefree(3), OddSquarefree(1), 5).scanned == expected);
  CHECK(search_eq1(OddSquarefree(3), OddSquarefree(1), 5, 8).scanned == expected);
}

TEST_CASE("certificate serialization round-trips byte-identically") {
  for (SearchCertificate cert :
       {search_eq1(OddSquarefree(3), OddSquarefree(1), 5),
        search_eq1(OddSquarefree(17), OddSquarefree(5), 30, 2),
        search_eq19(OddSquarefree(17), OddSquarefree(1), OddSquarefree(1), 5)}) {
    json j = to_json(cert);
    std::string once = j.dump(2);
    CHECK(json::parse(once).dump(2) == once);
    CHECK(j["equation"].is_string());
    CHECK(j["bound"].is_string());
    CHECK(j["params"].is_array());
    if (cert.outcome == SearchOutcome::counterexample) {
      REQUIRE(j.contains("witness"));
      CHECK(j["witness"].size() == 3);
      CHECK(j["witness"][0].is_string());
    } else {
      CHECK_FALSE(j.contains("witness"));
    }
  }
}

TEST_CASE("searches consistent with Theorem 1 pairs at desk scale") {
  for (const auto& [a, b] : generate_theorem1_pairs(600, 1)) {
    CHECK(search_eq1(OddSquarefree(a), OddSquarefree(b), 100, 2).outcome ==
          SearchOutcome::exhausted);
  }
}

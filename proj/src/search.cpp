#include "sqleg/search.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <utility>

namespace sqleg {

namespace {

bool maybe_square(const Natural& v) {
  static const auto table = [] {
    std::pair<std::array<bool, 64>, std::array<bool, 63>> t{};
    for (int r = 0; r < 64; ++r) t.first[r * r % 64] = true;
    for (int r = 0; r < 63; ++r) t.second[r * r % 63] = true;
    return t;
  }();
  if (!table.first[(v % 64).convert_to<unsigned>()]) return false;
  return table.second[(v % 63).convert_to<unsigned>()];
}

// Tests one (x, y) cell; returns z when the cell solves the equation.
using CellTest = std::function<std::optional<Natural>(const Natural& x, const Natural& y)>;

struct BlockResult {
  std::optional<Witness> witness;  // least in the block's scan order
  std::uint64_t scanned = 0;
};

// x-major scan of [x_lo, x_hi] x [1, bound]. Once the block holds a witness,
// later cells are only counted: they cannot beat it lexicographically.
// `global_min_x` lets a block skip testing once some block owning smaller x
// has found a witness; it never affects `scanned` or the merged minimum.
BlockResult scan_block(const Natural& x_lo, const Natural& x_hi, const Natural& bound,
                       const Natural& gx_coeff, const Natural& gy_coeff, const CellTest& test,
                       std::atomic<std::uint64_t>& global_min_x) {
  BlockResult result;
  for (Natural x = x_lo; x <= x_hi; ++x) {
    bool suppressed = result.witness.has_value() ||
                      (x > global_min_x.load(std::memory_order_relaxed));
    for (Natural y = 1; y <= bound; ++y) {
      if (gcd(gx_coeff * x, gy_coeff * y) != 1) continue;
      ++result.scanned;
      if (suppressed) continue;
      if (std::optional<Natural> z = test(x, y)) {
        result.witness = Witness{x, y, *z};
        suppressed = true;
        if (x <= UINT64_MAX) {
          std::uint64_t mine = x.convert_to<std::uint64_t>();
          std::uint64_t seen = global_min_x.load(std::memory_order_relaxed);
          while (mine < seen &&
                 !global_min_x.compare_exchange_weak(seen, mine, std::memory_order_relaxed)) {
          }
        }
      }
    }
  }
  return result;
}

SearchCertificate run_search(EquationId equation, std::vector<Natural> params,
                             const Natural& gx_coeff, const Natural& gy_coeff,
                             const Natural& bound, unsigned workers, const CellTest& test) {
  auto start = std::chrono::steady_clock::now();
  SearchCertificate cert;
  cert.equation = equation;
  cert.params = std::move(params);
  cert.bound = bound;
  cert.workers = workers;

  unsigned threads = workers == 0 ? 1 : workers;
  std::atomic<std::uint64_t> global_min_x{UINT64_MAX};
  std::vector<BlockResult> blocks(threads);

  // Contiguous x-blocks; block i covers (bound*i)/threads + 1 .. (bound*(i+1))/threads.
  auto block_lo = [&](unsigned i) { return Natural(bound * i / threads + 1); };
  auto block_hi = [&](unsigned i) { return Natural(bound * (i + 1) / threads); };

  if (threads == 1) {
    blocks[0] = scan_block(1, bound, bound, gx_coeff, gy_coeff, test, global_min_x);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
      pool.emplace_back([&, i] {
        blocks[i] = scan_block(block_lo(i), block_hi(i), bound, gx_coeff, gy_coeff, test,
                               global_min_x);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (const BlockResult& b : blocks) {
    cert.scanned += b.scanned;
    if (!b.witness) continue;
    if (!cert.witness || b.witness->x < cert.witness->x ||
        (b.witness->x == cert.witness->x && b.witness->y < cert.witness->y)) {
      cert.witness = b.witness;
    }
  }
  cert.outcome = cert.witness ? SearchOutcome::counterexample : SearchOutcome::exhausted;
  cert.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  return cert;
}

}  // namespace

const char* to_string(EquationId id) noexcept {
  return id == EquationId::eq1 ? "eq1" : "eq19";
}

const char* to_string(SearchOutcome o) noexcept {
  return o == SearchOutcome::exhausted ? "exhausted" : "counterexample";
}

SearchCertificate search_eq1(const OddSquarefree& s1, const OddSquarefree& s2,
                             const Natural& bound, unsigned workers) {
  CellTest test = [&s1, &s2](const Natural& x, const Natural& y) -> std::optional<Natural> {
    Natural lx = s1.value() * x * x;
    Natural ly = s2.value() * y * y;
    Natural v = lx * lx + ly * ly;
    if (!maybe_square(v)) return std::nullopt;
    SqrtResult r = isqrt(v);
    if (!r.exact) return std::nullopt;
    return r.root;
  };
  return run_search(EquationId::eq1, {s1.value(), s2.value()}, s1.value(), s2.value(), bound,
                    workers, test);
}

SearchCertificate search_eq19(const OddSquarefree& d1, const OddSquarefree& d2,
                              const OddSquarefree& d3, const Natural& bound, unsigned workers) {
  CellTest test = [&d1, &d2, &d3](const Natural& x, const Natural& y) -> std::optional<Natural> {
    Natural x2 = x * x, y2 = y * y;
    Natural num = d2.value() * d2.value() * x2 * x2 + d3.value() * d3.value() * y2 * y2;
    if (num % d1.value() != 0) return std::nullopt;
    Natural q = num / d1.value();
    if (!maybe_square(q)) return std::nullopt;
    SqrtResult r = isqrt(q);
    if (!r.exact) return std::nullopt;
    return r.root;
  };
  return run_search(EquationId::eq19, {d1.value(), d2.value(), d3.value()}, d2.value(),
                    d3.value(), bound, workers, test);
}

}  // namespace sqleg

#pragma once

#include <stdexcept>
#include <string>

namespace sqleg {

enum class errc {
  zero_input,
  not_odd_prime,
  even_modulus,
  not_coprime,
  not_odd_squarefree,
  bad_params,
  bad_family,
  bad_modulus,
  bad_primes,
  non_primitive,
  degenerate_y,
  invalid_input,
  parity_unsupported,
  structural_violation,
  not_descent_case,
  hypothesis_not_satisfied,
};

const char* to_string(errc code) noexcept;

/// Domain error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sqleg

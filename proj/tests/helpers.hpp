#pragma once

#include <doctest.h>

#include <stdexcept>

#include "sqleg/errors.hpp"

namespace sqleg::testing {

// Runs fn, expecting it to throw sqleg::Error; returns the code.
template <typename F>
errc code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a sqleg::Error to be thrown");
}

}  // namespace sqleg::testing

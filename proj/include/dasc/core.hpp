#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dasc {

// Finite sequence of nonnegative integers.  Positions are 1-based in every
// user-facing interface; storage is 0-based.
using IntSeq = std::vector<int>;

// An operation was applied outside its documented domain (e.g. a map given
// an input that is not a d-ascent sequence).
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Counters are 64-bit; overflow throws instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit count overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit count overflow");
  return r;
}

}  // namespace dasc

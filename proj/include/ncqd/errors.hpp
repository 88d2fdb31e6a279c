#pragma once

#include <stdexcept>
#include <string>

namespace ncqd {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes do not match, or a matrix cannot be factored as d_A * d_B.
struct dimension_error : error {
  using error::error;
};

// An invariant check failed (hermiticity, trace, positivity, normalization).
struct validation_error : error {
  using error::error;
};

// An iterative solver exhausted its sweep or iteration budget.
struct convergence_error : error {
  int iterations;
  convergence_error(const std::string& what, int iters)
      : error(what), iterations(iters) {}
};

// Malformed text input; line numbers are 1-based.
struct parse_error : error {
  int line;
  parse_error(const std::string& what, int line_no)
      : error(what), line(line_no) {}
};

}  // namespace ncqd

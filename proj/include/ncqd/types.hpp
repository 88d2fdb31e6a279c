#pragma once

#include <complex>
#include <cstdio>
#include <string>

namespace ncqd {

using cplx = std::complex<double>;

// Which subsystem of a bipartite state a decomposition is sliced along:
// Side::A gives the blocks <i_A|rho|j_A>, Side::B the blocks <i_B|rho|j_B>.
enum class Side { A, B };

enum class NormKind { Trace, HilbertSchmidt };

inline const char* to_string(Side s) { return s == Side::A ? "A" : "B"; }

inline const char* to_string(NormKind k) {
  return k == NormKind::Trace ? "trace" : "hs";
}

namespace detail {

inline std::string fmt_g(double x, int significant = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", significant, x);
  return buf;
}

}  // namespace detail

}  // namespace ncqd

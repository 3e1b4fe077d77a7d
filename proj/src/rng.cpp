#include "paprsim/rng.hpp"

#include <cmath>

namespace paprsim {

cplx RandomStream::next_complex_gaussian() {
  // Box-Muller on two fresh uniforms; the first is shifted into (0, 1].
  const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * M_PI * u2;
  return cplx(r * std::cos(ang), r * std::sin(ang));
}

}  // namespace paprsim

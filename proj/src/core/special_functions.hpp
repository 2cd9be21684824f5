#ifndef FOCKPROJ_CORE_SPECIAL_FUNCTIONS_HPP
#define FOCKPROJ_CORE_SPECIAL_FUNCTIONS_HPP

#include <complex>

namespace fockproj {

// Modified Bessel function of the first kind, order zero, by the power
// series sum_k (z²/4)^k / (k!)². The series is well conditioned for
// moderate |z|; arguments beyond the guard radius are rejected rather than
// silently losing digits.
inline constexpr double bessel_i0_guard_radius = 50.0;

std::complex<double> bessel_i0(std::complex<double> z);

}  // namespace fockproj

#endif

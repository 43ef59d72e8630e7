#ifndef LEVELWIDTH_SPECIAL_HPP
#define LEVELWIDTH_SPECIAL_HPP

#include <complex>

namespace lw::special {

/// log Gamma(z) for complex z away from the poles. The imaginary part is
/// determined modulo 2 pi, which is all exp() needs.
std::complex<double> log_gamma(std::complex<double> z);

/// log sin(pi z), stable for large |Im z| (same branch caveat as log_gamma).
std::complex<double> log_sin_pi(std::complex<double> z);

/// Hurwitz zeta sum_{k>=0} (k + a)^{-s}, s > 1, a > 0.
double hurwitz_zeta(double s, double a);

}  // namespace lw::special

#endif  // LEVELWIDTH_SPECIAL_HPP

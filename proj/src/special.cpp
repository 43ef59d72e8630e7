#include "levelwidth/special.hpp"

#include <cmath>

#include "levelwidth/errors.hpp"
#include "levelwidth/numerics.hpp"

namespace lw::special {

namespace {

using cd = std::complex<double>;

// B_{2k} for k = 1..10.
constexpr double bernoulli[10] = {1.0 / 6.0,       -1.0 / 30.0,   1.0 / 42.0,       -1.0 / 30.0,
                                  5.0 / 66.0,      -691.0 / 2730.0, 7.0 / 6.0,      -3617.0 / 510.0,
                                  43867.0 / 798.0, -174611.0 / 330.0};

cd stirling(cd z) {
  const cd inv = 1.0 / z;
  const cd inv2 = inv * inv;
  cd term = inv;
  cd series = 0.0;
  for (int k = 1; k <= 10; ++k) {
    series += bernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * term;
    term *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * numerics::pi) + series;
}

}  // namespace

cd log_sin_pi(cd z) {
  const double pi = numerics::pi;
  const double y = z.imag();
  if (std::abs(y) < 5.0) return std::log(std::sin(pi * z));
  if (y > 0.0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}) with |e^{2 i pi z}| small.
    const cd i(0.0, 1.0);
    return -i * pi * z + cd(std::log(0.5), 0.5 * pi) + std::log(1.0 - std::exp(2.0 * i * pi * z));
  }
  return std::conj(log_sin_pi(std::conj(z)));
}

cd log_gamma(cd z) {
  if (z.real() < 0.5) {
    if (z.imag() == 0.0 && z.real() == std::floor(z.real())) {
      throw DomainError("log_gamma: pole at non-positive integer");
    }
    return std::log(numerics::pi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  cd shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0)) throw DomainError("hurwitz_zeta: need s > 1 and a > 0");
  const int n = a < 12.0 ? static_cast<int>(std::ceil(12.0 - a)) : 0;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += std::pow(a + k, -s);
  const double x = a + n;
  sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // Euler-Maclaurin corrections B_{2j}/(2j)! s(s+1)...(s+2j-2) x^{-s-2j+1}.
  double rising = s;
  double factorial = 2.0;
  double power = std::pow(x, -s - 1.0);
  for (int j = 1; j <= 10; ++j) {
    sum += bernoulli[j - 1] / factorial * rising * power;
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    power /= x * x;
  }
  return sum;
}

}  // namespace lw::special

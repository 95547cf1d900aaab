#include "gms/cgamma.hpp"

#include <cmath>

namespace gms {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2π)/2

std::complex<double> lanczos_log_gamma(std::complex<double> z) {
  // Valid for Re z >= 0.5.  Standard shifted-sum form.
  z -= 1.0;
  std::complex<double> sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const std::complex<double> t = z + kLanczosG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection: log Γ(z) = log π − log sin(πz) − log Γ(1−z).  The branch
  // of the complex log may jump between nearby points; exp() of the
  // result is exact Γ regardless.
  const double pi = 3.14159265358979323846;
  const std::complex<double> s = std::sin(pi * z);
  return std::log(pi) - std::log(s) - lanczos_log_gamma(1.0 - z);
}

}  // namespace gms

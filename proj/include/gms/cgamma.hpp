// Log-Gamma for complex arguments.  Returns some branch of log Γ(z); only
// exp(log_gamma(z)) and differences of values at nearby points are
// contract-stable, which is all the difference-equation machinery needs.
#pragma once

#include <complex>

namespace gms {

// Lanczos approximation, reflected into the left half-plane when needed.
// Relative accuracy of exp(log_gamma) is ~1e-13 on moderate arguments.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace gms

// Difference equations in the Mellin variable.
//
// Each closed row of a normalized system relates the transform of one
// basis element to the transform of its successor under the permutation:
//
//   (z₁ + η̃ + λ_a + 1)·M_a(z₁ + η̃, z₂) = ṽ·z₁·M_b(z₁ − 1, z₂ + 1 + δ̃),
//
// where a = j1, b = j2 of the row, ṽ = p₂·pvals2/(p₁·pvals1), and λ_a is
// the column's weight ratio.  Composing these steps around a cycle of the
// permutation eliminates every transform but M_k and yields a one-variable
// finite difference equation whose first-axis shift is the sum Σ(η̃+1)
// over the cycle; the equation closes exactly when that sum is d₁ and the
// matching second-axis sum Σ(1+δ̃) is d₂.  The equation is solved by a
// ratio of Gamma factors times an exponential of the constant, fixed only
// up to a periodic factor; the solution chosen here has its poles running
// rightward along the support of the transform.  Peeled open edges extend
// a solved transform to the columns hanging off the cycles, contributing
// plain rational factors and integer argument shifts.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gms/gauss_manin.hpp"
#include "gms/spectra.hpp"

namespace gms {

// slope·z + intercept with exact rational coefficients.
struct AffineForm {
  Rat slope;
  Rat intercept;
};

std::complex<double> affine_at(const AffineForm& a, std::complex<double> z);

// One-variable finite difference equation
//   M(z + shift) = constant · ∏_j (z + numer_roots[j]) / (z + denom_roots[j]) · M(z).
// The transform's second argument rides along: applying the equation once
// also moves it by second_shift (−d₂ for a closing cycle).
struct EDFSpec {
  Rat shift;                     // α > 0
  Rat constant;                  // c
  std::vector<Rat> numer_roots;  // β_j
  std::vector<Rat> denom_roots;  // γ_j
  long second_shift = 0;
};

// Composes the row recurrences around the cycle of the permutation through
// column k.  Walking the cycle c₀ = k, c_{t+1} = σ(c_t) with accumulated
// offsets o_t = Σ_{r<t}(η̃_r + 1) and total shift α = Σ_t(η̃_t + 1) produces
//   numer roots  β_t = α − o_t − η̃_t,
//   denom roots  γ_t = α − o_t + λ_{c_t} + 1,
//   constant     ∏_t ṽ_t.
// A closing turn displaces the arguments by a positive multiple of
// (d₁, −d₂); generically α = d₁, but some cycles come back only after
// t·(d₁, −d₂) with t > 1, and the composed equation then has shift t·d₁.
// Throws when k is not on any cycle, and "block does not close" when the
// turn's displacement is not proportional to (d₁, −d₂).
EDFSpec block_edf(const NormalizedGM& ngm, const SpectraReport& sr,
                  std::pair<long, long> d, size_t k);

// Product of Gamma factors with a constant base raised to a linear
// exponent:
//   prefactor · base^{(z₁ + base_shift)/shift}
//     · ∏ Γ(gamma_num args) / ∏ Γ(gamma_den args)
//     · ∏ rational_factors (num affine / den affine, both in z₁)
//     · 1 / (a₁·z₁ + a₂·z₂ + b)            (when z2_factor is present).
// All Gamma arguments are affine in z₁ with slope −1/shift.
struct GammaProduct {
  Rat base = Rat(1);
  Rat shift = Rat(1);
  Rat base_shift = Rat(0);
  Rat prefactor = Rat(1);
  std::vector<AffineForm> gamma_num;
  std::vector<AffineForm> gamma_den;
  std::vector<std::pair<AffineForm, AffineForm>> rational_factors;
  struct LinearZ2 {
    Rat a1, a2, b;
  };
  std::optional<LinearZ2> z2_factor;
};

// Solves the difference equation exactly:
//   M(z) = c^{z/α} · ∏_j Γ(−(z+γ_j)/α + 1) / ∏_j Γ(−(z+β_j)/α + 1).
// Shifting by α and applying Γ(u)/Γ(u−1) = u−1 reproduces the equation
// identically; the constant normalization (finite, z-independent) is left
// in the periodic freedom of the solution.  Requires |numer| = |denom|.
GammaProduct solve_edf(const EDFSpec& e);

// Full two-variable transform formula for basis column k and exponent
// index q = 0, 1, 2, …  For k on a closing cycle this is the solved cycle
// equation times the reciprocal line (z₂ − q)/d₂ + z₁/d₁, whose direction
// (d₁, −d₂) is invariant under the difference equation.  For k hanging off
// a cycle along open edges, each step along the chain contributes a
// rational factor and shifts the solved formula's arguments — by
// (−(η̃+1), +(1+δ̃)) when the step solves an open row for its source
// column, by the opposite displacement when it solves the row for its
// target — all folded into base_shift, the Gamma intercepts, and the
// line.  Throws when no recurrence closes for k.
GammaProduct mellin_formula(const GMSystem& gm, const NormalizedGM& ngm,
                            const SpectraReport& sr, size_t k, long q);

// Numeric value via complex log-Gamma, summed before exponentiating so
// branch ambiguities cancel.  Throws when z₁ is within 1e-8 of a pole of a
// numerator Gamma factor, a zero of a rational denominator, or a zero of
// the reciprocal line, naming the offending location.  A denominator Gamma
// factor at a pole makes the value exactly 0.
std::complex<double> eval_gamma_product(const GammaProduct& gp,
                                        std::complex<double> z1,
                                        std::complex<double> z2);

// Samples z₁ (and z₂) with Re ∈ [−5,5], |Im| ∈ [1,10], evaluates both
// sides of the difference equation through the solved product, and returns
// the maximum relative residual |M(z+α) − c·∏((z+β)/(z+γ))·M(z)| / |M(z+α)|.
// The ratio is computed from summed log differences, so large blocks do
// not overflow.
double verify_edf_numeric(const GammaProduct& gp, const EDFSpec& e,
                          int n_samples = 100, std::uint64_t seed = 42);

// Periodic damping factor
//   g^±(z) = 1 + e^{±2πi·beta} · ∏_j sin 2π(z+alphas[j]) / sin 2π(z+rhos[j]),
// with beta = −1 + Σ_j (rhos[j] − alphas[j]).  Multiplying a balanced
// Gamma ratio ∏ Γ(z+alphas[j])/Γ(z+rhos[j]) (which decays like
// |y|^{−(beta+1)} along |Im z| = |y| → ∞) by g^± keeps it a solution of
// the same difference equation and damps the integrand of the inverse
// transform.  Period exactly 1 in z.
struct NorlundFactor {
  std::vector<Rat> alphas;
  std::vector<Rat> rhos;
  int sign = +1;
  Rat beta = Rat(0);

  std::complex<double> operator()(std::complex<double> z) const;
};

NorlundFactor norlund_factor(std::vector<Rat> alphas, std::vector<Rat> rhos,
                             int sign);

// The damping factor matched to a solved product: alphas and rhos are the
// Gamma argument intercepts (numerator and denominator respectively), the
// lists the product carries after the substitution z = −z₁/shift.
NorlundFactor norlund_from_gamma_product(const GammaProduct& gp, int sign);

// Max |g(z+1) − g(z)| over seeded samples away from the real axis.
double norlund_periodicity_residual(const NorlundFactor& g,
                                    int n_samples = 100,
                                    std::uint64_t seed = 42);

// |g(x+iy) · ∏ Γ(x+iy+alphas[j])/Γ(x+iy+rhos[j])| for each requested y.
std::vector<double> norlund_decay_profile(const NorlundFactor& g, double x,
                                          const std::vector<double>& ys);

// The cone carrying the support of the transform of column k: vertex at
// (−λ_k − d₁, (d₂/d₁)(λ_k + d₁)), bounded by z₁ ≥ −λ_k − d₁ and
// z₁/d₁ + z₂/d₂ ≥ 0.  projection_seq lists the first-axis base offsets of
// the polar lines over the block of k (walking the cycle from k when k is
// cyclic); every pole projects into ∪ (offset + generator·Z≥0).
struct SupportCone {
  std::pair<Rat, Rat> vertex;
  struct HalfPlane {
    Rat a1, a2, b;  // a1·z1 + a2·z2 + b ≥ 0
  };
  HalfPlane ineq1, ineq2;
  std::vector<Rat> projection_seq;
  long generator = 1;  // d₁
};

SupportCone support_cone(const NormalizedGM& ngm, std::pair<long, long> d,
                         size_t k);

// First-axis pole base offsets of a solved product's numerator Gamma
// factors: the smallest pole of each factor, with further poles at
// +shift·Z≥0 steps.
std::vector<Rat> gamma_pole_offsets(const GammaProduct& gp);

// One linear form c1·s1 + c2·s2 + c0 − offset, the offset a symbolic
// non-negative integer placeholder ("alpha", "beta", or "gamma").
struct SymbolicLine {
  Rat c1, c2, c0;
  std::string offset;
};

std::string line_to_string(const SymbolicLine& line);

// The two families of candidate linear factors of the two-variable
// Bernstein–Sato polynomial: family one pairs s₁ + λ + d₁ − alpha over the
// distinct spectrum values with the cross form d₁s₂ + d₂s₁ − gamma; family
// two pairs s₂ − (d₂/d₁)λ − beta with the same cross form.  Duplicates
// within a family are removed.
struct BFunctionLines {
  std::vector<SymbolicLine> family1;
  std::vector<SymbolicLine> family2;
};

BFunctionLines b_function_lines(const SpectraReport& sr,
                                std::pair<long, long> d);

// Human-readable rendering of a Gamma product.
std::string gamma_product_to_string(const GammaProduct& gp);

}  // namespace gms

// Spectra of the direct-image system and the Hodge-theoretic counts they
// determine.
//
// Each basis monomial of the contact algebra contributes one rational
// exponent λ_j = (w(φ_j) + |w| − |p|)/p₁ governing the growth of the
// corresponding fiber integral.  The multiset is symmetric about a
// rational center, and the counts of negative and zero exponents are the
// Hodge numbers h⁰¹ = h¹⁰ and h¹¹ of a smooth fiber; the negative count
// equals the geometric genus of the projectivized fiber, which is also
// the coefficient of t^{D−1} in an explicit quotient of Poincaré series
// (D = |p| − |w|).  Both derivations are implemented and cross-checked.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gms/graded.hpp"
#include "gms/series.hpp"
#include "gms/weights.hpp"

namespace gms {

// The sorted spectrum with its symmetry center and scaled companions.
struct SpectraReport {
  std::vector<Rat> lambdas;   // ascending, one entry per basis monomial
  Rat center = Rat(0);        // midpoint of the symmetric pairing
  long p1 = 0;
  long p2 = 0;
  std::vector<Rat> lambdas2;  // second-axis exponents (p₁/p₂)·λ_i, ascending

  // The same list under the opposite sign convention
  // (w(φ_j) + |p| − |w|)/p₁, ascending.  Surfaced for diagnostic output
  // only; all counting below uses `lambdas`.
  std::vector<Rat> alternate_sign_lambdas;
};

SpectraReport spectra(const GradedBasis& phi, const WeightSystem& W);

// Result of verifying λ_i + λ_{μ+1−i} = 2·center for the symmetric
// 1-based pairing (0-based: i with μ−1−i).
struct SymmetryCheck {
  bool symmetric = true;
  Rat pair_sum = Rat(0);  // the common value, 2·center, when symmetric
  std::optional<std::pair<size_t, size_t>> failing_pair;  // first violation
};

SymmetryCheck check_symmetry(const SpectraReport& sr);

// Counts of spectra by sign and the genus computed along two independent
// routes (negative-exponent count vs series coefficient).
struct HodgeReport {
  long h01 = 0;
  long h10 = 0;
  long h11 = 0;
  long genus_projective = 0;    // = h01: geometric genus of the closed fiber
  long genus_series_coeff = 0;  // the coefficient extracted by genus_series
};

HodgeReport hodge_numbers(const SpectraReport& sr, const WeightSystem& W);

// Expansion of (P_Φ̃(t) − t^D)/((1−t)(1−t^D)) with D = |p| − |w|, together
// with the genus: the coefficient of t^{D−1}.  The equivalent closed count
// 2π₀ + π₁ + ⋯ + π_{D−1} − 1 over the coefficients π_i of P_Φ̃ is computed
// alongside and must agree.  Throws std::invalid_argument when D ≤ 0.
std::pair<SeriesQ, long> genus_series(const WeightSystem& W);

}  // namespace gms

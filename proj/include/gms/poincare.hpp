/*
 * poincare.hpp
 * ------------
 * Poincaré series of the two graded quotient modules attached to a
 * weight system, and the Milnor number they must agree on.
 *
 * poincare_V computes the residue formula
 *
 *   P_V(t) = Res_{tau=0} tau^{-m+k-1}/(tau+1)
 *            * [ prod_i (1+tau t^{w_i})/(1-t^{w_i})
 *              * prod_j (1-t^{p_j})/(1+tau t^{p_j}) + tau ]
 *
 * by exact Laurent expansion in the auxiliary variable over truncated
 * t-series (elementary symmetric coefficients for the numerator
 * product, complete homogeneous ones for the inverted denominator
 * product), extracting the tau^{-1} coefficient.  For the space-curve
 * case (m=3, k=2) the result is cross-checked against the closed
 * rational form
 *
 *   (1-t^{p1})(1-t^{p2})(t^{w1}+t^{w2}+t^{w3}-t^{p1}-t^{p2}-1)
 *     / prod_i (1-t^{w_i})  +  1
 *
 * and any disagreement throws.
 *
 * poincare_phi computes
 *
 *   P(t) = t^{|p|-|w|} + (1-t^{|p|-|w|}) prod_j(1-t^{p_j}) / prod_i(1-t^{w_i}) ,
 *
 * a polynomial symmetric about |p|-|w| with degree 2(|p|-|w|).
 */
#pragma once

#include "gms/series.hpp"
#include "gms/weights.hpp"

namespace gms {

// Smallest truncation order the series contracts require.
long poincare_min_truncation(const WeightSystem& W);

// Poincaré series of the module of primitive forms (truncation N must
// be >= 2(|p|-|w|) + max p_j).
SeriesQ poincare_V(const WeightSystem& W, long N);

// Poincaré series of the graded local algebra (requires |p| > |w| and
// N >= 2(|p|-|w|)).
SeriesQ poincare_phi(const WeightSystem& W, long N);

// Common value P_phi(1) = P_V(1); throws when the two series disagree
// (non-isolated or otherwise invalid input) or the value is not a
// positive integer.
long milnor_number(const WeightSystem& W);

}  // namespace gms

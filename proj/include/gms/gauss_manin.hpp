// The connection matrices of the direct-image system of a quasihomogeneous
// space-curve singularity, their normalization into diagonal-times-
// permutation shape, and the exact consistency identities they satisfy.
//
// The central computation expresses each 3-form ω̃_i∧df_ℓ in the module
// basis φ_j·dx with polynomial coefficients in (f₁,f₂): the coefficient
// matrices P1 (from ∧df₂) and P2 (from ∧df₁) determine the saturation
// matrix A = p₁s₁·P1 − p₂s₂·P2 whose determinant is the discriminant.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gms/bivariate.hpp"
#include "gms/graded.hpp"

namespace gms {

// The assembled system for one singularity: bases, coefficient matrices,
// weight diagonals, the saturation matrix and its determinant.
struct GMSystem {
  SingularitySpec spec;
  GradedBasis phi;  // monomial basis of the contact algebra, weight order
  GradedBasis F;    // 2-form basis, representatives chosen for sparse rows

  // mu x mu matrices over Q[s1,s2]; row i corresponds to F element i,
  // column j to phi element j.
  std::vector<std::vector<BivariatePoly>> P1;  // from ω̃_i ∧ df₂
  std::vector<std::vector<BivariatePoly>> P2;  // from ω̃_i ∧ df₁
  std::vector<std::vector<BivariatePoly>> A;   // p₁s₁·P1 − p₂s₂·P2

  std::vector<long> L_V;    // diagonal: ℓ_i = weight of ω̃_i
  std::vector<long> L_Phi;  // diagonal: w(φ_j) + |w| − |p|

  BivariatePoly Delta;  // det A
};

// Writes g·dx in the free basis {φ_j·dx} with coefficients in Q[f₁,f₂],
// modulo the submodule spanned by the Jacobian determinants
// det ∂(f₁,f₂,x^α)/∂(x₁,x₂,x₃)·dx.  Returns the row (P_j(s₁,s₂))_j of
// coefficient polynomials, s_ℓ standing for f_ℓ.  Solved weight-slice by
// weight-slice with exact linear algebra.  Throws std::runtime_error when
// the expansion does not exist (non-membership) or is not unique (the
// module fails to be free over the parameter ring in this slice).
std::vector<BivariatePoly> brieskorn_decompose(const Poly& g,
                                               const SingularitySpec& spec,
                                               const GradedBasis& phi);

// Computes both coefficient matrices for all rows of the 2-form basis,
// choosing within each weight slice of the quotient representatives whose
// rows are supported on single basis monomials whenever such
// representatives exist, and assembles A and Delta.
GMSystem gm_matrices(const SingularitySpec& spec);

// Exact determinant of A.  Throws std::runtime_error("degenerate system")
// when the determinant vanishes identically.
BivariatePoly discriminant(const GMSystem& gm);

// The diagonal-times-permutation normal form of the coefficient matrices.
// Row i of P1 carries a single entry p1vals[i]·s₁^{a}·s₂^{δ_i} in column
// j1[i]; row i of P2 a single entry p2vals[i]·s₁^{η_i}·s₂^{b} in column
// j2[i].  Dividing row i by s₁^{η_i} s₂^{δ_i} makes P′⁽¹⁾ a matrix over
// C[s₁] and P′⁽²⁾ a matrix over C[s₂]; the column bookkeeping is the
// permutation-with-chains structure driving the difference equations.
struct NormalizedGM {
  size_t mu = 0;

  std::vector<long> eta;    // η_i ≥ 0: s₁-exponent cleared from row i
  std::vector<long> delta;  // δ_i ≥ 0: s₂-exponent cleared from row i

  // Exponents remaining after the clearing: P′⁽¹⁾ row i carries
  // s₁^{eta_tilde[i]}, P′⁽²⁾ row i carries s₂^{delta_tilde[i]}.
  std::vector<long> eta_tilde;
  std::vector<long> delta_tilde;

  std::vector<Rat> pvals1;  // rational coefficient of the P1 entry (0 if none)
  std::vector<Rat> pvals2;  // rational coefficient of the P2 entry (0 if none)

  // Column index (0-based) of the single nonzero entry per row; -1 for an
  // identically zero row.
  std::vector<int> j1;
  std::vector<int> j2;

  // Weights of the cleared forms: ℓ′_i = ℓ_i − η_i p₁ − δ_i p₂.
  std::vector<long> L_Fprime;

  // Weight ratio of the basis diagonal, per column: λ_j = (w(φ_j)+|w|−|p|)/p₁.
  std::vector<Rat> lambda;

  // Each row with both entries present draws an edge from column j1[i] to
  // column j2[i].  Edges ending in a column that is never a source do not
  // close; they are peeled off as chains, and sigma is the remaining
  // closed part (which must then use each source column once).
  // permutation[] is sigma completed with fixed points on columns where it
  // is undefined; it is a genuine permutation of everything, with no
  // peeled edges left over, exactly when sigma_bijective.
  std::vector<size_t> permutation;
  bool sigma_bijective = true;

  // Orbit structure on the columns: disjoint cycles of sigma (each listed
  // from its smallest column), chains, and the block sizes: one entry per
  // cycle (its length) plus 1 for every column outside all cycles, summing
  // to mu.  A chain is a maximal path of open edges; the element touching
  // a cycle sits at whichever end attaches (last for a path feeding into a
  // cycle, first for a peeled branch hanging off one).
  std::vector<std::vector<size_t>> cycles;
  std::vector<std::vector<size_t>> chains;
  std::vector<long> blocks;

  // Which row wrote which edge.  closed_row[c] is the row whose closed
  // edge leaves column c (so its P1 entry sits in column c and its P2
  // entry in column permutation[c]); -1 when no closed edge starts at c.
  // open_edges lists the peeled edges together with their owning rows.
  // Composing the row recurrences along cycles and chains needs this map
  // from an edge back to the coefficients of the row that produced it.
  std::vector<int> closed_row;
  struct OpenEdge {
    size_t from, to, row;
  };
  std::vector<OpenEdge> open_edges;
};

// Extracts the normal form.  Throws std::runtime_error when some row of P1
// or P2 has more than one nonzero entry or a non-monomial entry (the
// system then has no single-monomial normal form and the downstream
// difference-equation machinery does not apply), or when two closed rows
// carry their P1 entry in the same column.
NormalizedGM normalize_gm(const GMSystem& gm);

// Exact verification of the weighted-homogeneity identities satisfied by
// the normalized matrices: for every nonzero entry of P′⁽ℓ⁾ at (i, j),
//   entry·(L_Phi[j] − ℓ′_i + p_ℓ) + E(entry) = 0,
// where E multiplies a monomial s₁^a s₂^b by a·p₁ + b·p₂.  All residuals
// must vanish identically.
struct EulerReport {
  bool all_zero = true;
  std::vector<Rat> residual1;  // per row; 0 for zero rows
  std::vector<Rat> residual2;
  // (matrix 1 or 2, row, column) of each nonzero residual.
  std::vector<std::tuple<int, size_t, size_t>> failures;
  std::string detail;  // human-readable description of the first failure
};

EulerReport verify_euler_identity(const NormalizedGM& ngm, const GMSystem& gm);

// Newton-diagram data of the discriminant: (d₁, d₂) = (p₂, p₁)/gcd(p₁,p₂).
// d₂/d₁ = p₁/p₂ in lowest terms; the non-monomial factor of Delta has
// axis intercepts at integer multiples (e·d₁, 0) and (0, e·d₂).
std::pair<long, long> newton_d(const WeightSystem& W);

// Cross-checks Delta against (d₁,d₂): strips the monomial content and
// tests that the remaining factor meets the axes at a common positive
// multiple of (d₁, d₂).  Returns a description of the incompatibility, or
// nullopt when compatible.  A monomial Delta reports the degenerate
// "no non-monomial factor" case.
std::optional<std::string> newton_delta_warning(const BivariatePoly& delta,
                                                long d1, long d2);

}  // namespace gms

/*
 * graded.hpp
 * ----------
 * Graded quotient bases for a space curve cut out by two
 * quasihomogeneous equations in three variables:
 *
 *   Phi  =  O / (2x2 Jacobian minors, f1, f2)        (monomial basis)
 *   F    =  Omega^2 / (df1^Omega^1 + df2^Omega^1 + i_E Omega^3)
 *                                                    (2-form basis)
 *
 * Both quotients are computed one weight slice at a time by exact
 * Gaussian elimination, so every representative is canonical and the
 * weight multisets can be compared against the two Poincaré series.
 *
 * Differential forms are stored componentwise over the basis forms
 * (dx1,dx2,dx3) in degree 1 and (dx2^dx3, dx3^dx1, dx1^dx2) in
 * degree 2; the weight of a form term adds the weights of its
 * differentials to the weight of its coefficient.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gms/linalg.hpp"
#include "gms/poly.hpp"
#include "gms/weights.hpp"

namespace gms {

struct SingularitySpec {
    WeightSystem W;
    Poly f1, f2;
    std::string name;  // optional catalog label
};

// Validating factory: f1, f2 must be quasihomogeneous of weights p1, p2.
SingularitySpec make_singularity_spec(WeightSystem W, Poly f1, Poly f2,
                                      std::string name = "");

// ---------------------------------------------------------------------------
// Differential forms

class DiffForm {
  public:
    explicit DiffForm(int degree) : degree_(degree), comp_(component_count(degree)) {
        if (degree < 0 || degree > 3)
            throw std::invalid_argument("DiffForm degree must be in 0..3");
    }

    static DiffForm from_poly(const Poly& g) {
        DiffForm f(0);
        f.comp_[0] = g;
        return f;
    }
    // g * (basis r-form with the given component index).
    static DiffForm basis_form(int degree, size_t index, const Poly& g = Poly(Rat(1)));

    int degree() const { return degree_; }
    size_t components() const { return comp_.size(); }
    const Poly& comp(size_t i) const { return comp_.at(i); }
    Poly& comp(size_t i) { return comp_.at(i); }
    bool is_zero() const;

    DiffForm& operator+=(const DiffForm& o);
    DiffForm& operator-=(const DiffForm& o);
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
    friend DiffForm operator*(const Poly& g, const DiffForm& f);
    friend DiffForm operator*(const Rat& c, const DiffForm& f);
    bool operator==(const DiffForm& o) const {
        return degree_ == o.degree_ && comp_ == o.comp_;
    }

    std::string to_string() const;

    static size_t component_count(int degree) { return degree == 0 || degree == 3 ? 1 : 3; }
    // Weight contributed by the basis differentials of component i.
    static long component_weight(const WeightSystem& W, int degree, size_t i);

  private:
    int degree_;
    std::vector<Poly> comp_;
};

// d(g) = sum dg/dx_i dx_i.
DiffForm exterior_derivative(const Poly& g);

// Wedge product; result degree is the sum (throws beyond 3).
DiffForm wedge(const DiffForm& a, const DiffForm& b);

// Contraction with the Euler field  E = sum w_i x_i d/dx_i  of a 3-form:
// i_E(h dx1^dx2^dx3) = h (w1 x1 dx2^dx3 + w2 x2 dx3^dx1 + w3 x3 dx1^dx2).
DiffForm euler_contraction(const WeightSystem& W, const DiffForm& three_form);

// Quasihomogeneous weight of a form (coefficients plus differentials);
// nullopt when mixed or identically zero.
std::optional<long> form_weight(const WeightSystem& W, const DiffForm& f);

// ---------------------------------------------------------------------------
// Graded bases

enum class BasisKind { PHI, F };

struct GradedBasis {
    struct Element {
        std::variant<Poly, DiffForm> repr;
        long weight = 0;
    };
    BasisKind kind = BasisKind::PHI;
    std::vector<Element> elements;

    size_t size() const { return elements.size(); }
    long weight(size_t i) const { return elements.at(i).weight; }
    const Poly& poly_repr(size_t i) const { return std::get<Poly>(elements.at(i).repr); }
    const DiffForm& form_repr(size_t i) const {
        return std::get<DiffForm>(elements.at(i).repr);
    }
    std::string repr_text(size_t i) const;
};

// All monomials of weight exactly d, lexicographically descending
// (x1 > x2 > x3); empty for d < 0.
std::vector<Monomial> enumerate_monomials(const WeightSystem& W, long d);

// Reduced span of the defining relations (Jacobian minors, f1, f2, each
// times all monomial shifts) inside the weight-d slice, over the
// coordinates enumerate_monomials(W, d).  The non-pivot columns are the
// canonical monomial representatives of the weight-d piece of the contact
// algebra; any other column subset completing the span to full dimension
// is an equally valid representative choice.
EchelonSpan phi_slice_span(const SingularitySpec& S, long d);

// Coordinate chart for the weight-d slice of 2-forms.  Component i of a
// 2-form contributes the block of coefficient monomials of weight
// d - (|w| - w_i); a slice vector concatenates the three blocks.  The
// reduced span of  df1^Omega^1 + df2^Omega^1 + i_E(Omega^3)  inside the
// slice is carried along: its non-pivot coordinates are the canonical
// quotient representatives used by basis_F, and any coordinate set
// completing the span is an equally valid choice of representatives.
struct TwoFormSlice {
    long weight = 0;
    std::array<std::vector<Monomial>, 3> block;
    std::array<size_t, 3> offset{};
    size_t dim = 0;
    EchelonSpan submodule = EchelonSpan(0);

    // Coordinates of a slice 2-form (throws when f leaves the slice).
    RatVec vectorize(const DiffForm& f) const;
    // Inverse of vectorize on coordinate vectors.
    DiffForm form(const RatVec& v) const;
};

TwoFormSlice two_form_slice(const SingularitySpec& S, long d);

// The three 2x2 minors d(f1,f2)/d(x_i,x_j) for (i,j) = (1,2), (1,3), (2,3);
// minor (i,j) is quasihomogeneous of weight |p| - w_i - w_j.
std::array<Poly, 3> jacobian_minors(const SingularitySpec& S);

// Monomial basis of Phi, weights 0..2(|p|-|w|); count = Milnor number and
// weight multiset = poincare_phi exponents (both enforced).
GradedBasis basis_phi(const SingularitySpec& S);

// 2-form basis of F; weightwise dimensions must equal the poincare_V
// coefficients (enforced), so the count is again the Milnor number.
GradedBasis basis_F(const SingularitySpec& S);

// det d(f1,f2,g)/d(x1,x2,x3): the coefficient of df1^df2^dg on dx.
Poly jacobian_bracket(const SingularitySpec& S, const Poly& g);

}  // namespace gms

#include "gms/graded.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gms/linalg.hpp"
#include "gms/poincare.hpp"
#include "gms/series.hpp"

namespace gms {

SingularitySpec make_singularity_spec(WeightSystem W, Poly f1, Poly f2,
                                      std::string name) {
    if (!check_quasihomogeneous(W, f1, W.p(0)))
        throw std::invalid_argument(
            "make_singularity_spec: f1 is not quasihomogeneous of weight " +
            std::to_string(W.p(0)));
    if (!check_quasihomogeneous(W, f2, W.p(1)))
        throw std::invalid_argument(
            "make_singularity_spec: f2 is not quasihomogeneous of weight " +
            std::to_string(W.p(1)));
    return SingularitySpec{std::move(W), std::move(f1), std::move(f2), std::move(name)};
}

// ---------------------------------------------------------------------------
// DiffForm

DiffForm DiffForm::basis_form(int degree, size_t index, const Poly& g) {
    DiffForm f(degree);
    f.comp_.at(index) = g;
    return f;
}

bool DiffForm::is_zero() const {
    for (const Poly& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
    if (degree_ != o.degree_)
        throw std::invalid_argument("DiffForm: degree mismatch in sum");
    for (size_t i = 0; i < comp_.size(); ++i) comp_[i] += o.comp_[i];
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
    if (degree_ != o.degree_)
        throw std::invalid_argument("DiffForm: degree mismatch in difference");
    for (size_t i = 0; i < comp_.size(); ++i) comp_[i] -= o.comp_[i];
    return *this;
}

DiffForm operator*(const Poly& g, const DiffForm& f) {
    DiffForm r(f.degree_);
    for (size_t i = 0; i < f.comp_.size(); ++i) r.comp_[i] = g * f.comp_[i];
    return r;
}

DiffForm operator*(const Rat& c, const DiffForm& f) {
    DiffForm r(f.degree_);
    for (size_t i = 0; i < f.comp_.size(); ++i) r.comp_[i] = c * f.comp_[i];
    return r;
}

long DiffForm::component_weight(const WeightSystem& W, int degree, size_t i) {
    switch (degree) {
        case 0: return 0;
        case 1: return W.w(static_cast<int>(i));
        case 2: return W.weight_sum() - W.w(static_cast<int>(i));
        case 3: return W.weight_sum();
        default: throw std::invalid_argument("DiffForm degree must be in 0..3");
    }
}

std::string DiffForm::to_string() const {
    static const char* labels1[] = {"dx1", "dx2", "dx3"};
    static const char* labels2[] = {"dx2 dx3", "dx3 dx1", "dx1 dx2"};
    std::string out;
    for (size_t i = 0; i < comp_.size(); ++i) {
        if (comp_[i].is_zero()) continue;
        std::string label;
        if (degree_ == 1)
            label = labels1[i];
        else if (degree_ == 2)
            label = labels2[i];
        else if (degree_ == 3)
            label = "dx1 dx2 dx3";
        std::string c = comp_[i].to_string();
        std::string term;
        if (c == "1")
            term = label;
        else if (comp_[i].term_count() > 1 || c[0] == '-')
            term = "(" + c + ") " + label;
        else
            term = c + " " + label;
        if (label.empty()) term = c;  // degree 0
        out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

DiffForm exterior_derivative(const Poly& g) {
    DiffForm f(1);
    for (int i = 0; i < 3; ++i) f.comp(static_cast<size_t>(i)) = g.derivative(i);
    return f;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    int d = a.degree() + b.degree();
    if (d > 3)
        throw std::invalid_argument("wedge: degree above the ambient dimension");
    if (a.degree() == 0) return a.comp(0) * b;
    if (b.degree() == 0) return b.comp(0) * a;
    if (a.degree() == 1 && b.degree() == 1) {
        DiffForm r(2);
        r.comp(0) = a.comp(1) * b.comp(2) - a.comp(2) * b.comp(1);
        r.comp(1) = a.comp(2) * b.comp(0) - a.comp(0) * b.comp(2);
        r.comp(2) = a.comp(0) * b.comp(1) - a.comp(1) * b.comp(0);
        return r;
    }
    // 1-form ^ 2-form (either order): dx_i ^ (basis 2-form i) = dx1^dx2^dx3.
    const DiffForm& one = a.degree() == 1 ? a : b;
    const DiffForm& two = a.degree() == 1 ? b : a;
    DiffForm r(3);
    for (size_t i = 0; i < 3; ++i) r.comp(0) += one.comp(i) * two.comp(i);
    return r;
}

DiffForm euler_contraction(const WeightSystem& W, const DiffForm& three_form) {
    if (three_form.degree() != 3)
        throw std::invalid_argument("euler_contraction expects a 3-form");
    DiffForm r(2);
    for (int i = 0; i < 3; ++i) {
        Poly xi = Poly::variable(i);
        r.comp(static_cast<size_t>(i)) = Rat(W.w(i)) * (xi * three_form.comp(0));
    }
    return r;
}

std::optional<long> form_weight(const WeightSystem& W, const DiffForm& f) {
    std::optional<long> d;
    for (size_t i = 0; i < f.components(); ++i) {
        if (f.comp(i).is_zero()) continue;
        auto cw = f.comp(i).quasihomogeneous_weight(W);
        if (!cw) return std::nullopt;
        long total = *cw + DiffForm::component_weight(W, f.degree(), i);
        if (!d)
            d = total;
        else if (*d != total)
            return std::nullopt;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Graded bases

std::string GradedBasis::repr_text(size_t i) const {
    const auto& r = elements.at(i).repr;
    if (std::holds_alternative<Poly>(r)) return std::get<Poly>(r).to_string();
    return std::get<DiffForm>(r).to_string();
}

std::vector<Monomial> enumerate_monomials(const WeightSystem& W, long d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (long a = 0; a * W.w(0) <= d; ++a)
        for (long b = 0; a * W.w(0) + b * W.w(1) <= d; ++b) {
            long rem = d - a * W.w(0) - b * W.w(1);
            if (rem % W.w(2) == 0)
                out.push_back({static_cast<int>(a), static_cast<int>(b),
                               static_cast<int>(rem / W.w(2))});
        }
    std::sort(out.begin(), out.end(), std::greater<Monomial>());
    return out;
}

std::array<Poly, 3> jacobian_minors(const SingularitySpec& S) {
    std::array<Poly, 3> minors;
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int t = 0; t < 3; ++t) {
        int i = pairs[t][0], j = pairs[t][1];
        Poly m = S.f1.derivative(i) * S.f2.derivative(j) -
                 S.f1.derivative(j) * S.f2.derivative(i);
        long expected = S.W.degree_sum() - S.W.w(i) - S.W.w(j);
        if (!m.is_zero() && !check_quasihomogeneous(S.W, m, expected))
            throw std::runtime_error("jacobian_minors: minor (" + std::to_string(i + 1) +
                                     "," + std::to_string(j + 1) +
                                     ") is not quasihomogeneous of weight " +
                                     std::to_string(expected));
        minors[static_cast<size_t>(t)] = std::move(m);
    }
    return minors;
}

namespace {

// Vectorize a polynomial over the monomials of one weight slice.
RatVec slice_vector(const Poly& g, const std::map<Monomial, size_t, MonoLess>& index,
                    const char* what) {
    RatVec v(index.size(), Rat(0));
    for (const auto& [m, c] : g.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::runtime_error(std::string(what) +
                                     ": generator leaves its weight slice");
        v[it->second] += c;
    }
    return v;
}

}  // namespace

EchelonSpan phi_slice_span(const SingularitySpec& S, long d) {
    const WeightSystem& W = S.W;
    auto minors = jacobian_minors(S);
    std::vector<std::pair<Poly, long>> gens;
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int t = 0; t < 3; ++t)
        if (!minors[static_cast<size_t>(t)].is_zero())
            gens.emplace_back(minors[static_cast<size_t>(t)],
                              W.degree_sum() - W.w(pairs[t][0]) - W.w(pairs[t][1]));
    gens.emplace_back(S.f1, W.p(0));
    gens.emplace_back(S.f2, W.p(1));

    auto monos = enumerate_monomials(W, d);
    std::map<Monomial, size_t, MonoLess> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

    EchelonSpan span(monos.size());
    for (const auto& [g, wg] : gens)
        for (const Monomial& shift : enumerate_monomials(W, d - wg))
            span.insert(slice_vector(g * Poly::monomial(shift), index, "phi_slice_span"));
    return span;
}

GradedBasis basis_phi(const SingularitySpec& S) {
    const WeightSystem& W = S.W;
    const long mu = milnor_number(W);
    const long D = W.top_weight();
    const long N = poincare_min_truncation(W);
    const SeriesQ pphi = poincare_phi(W, N);

    GradedBasis B;
    B.kind = BasisKind::PHI;
    for (long d = 0; d <= 2 * D; ++d) {
        auto monos = enumerate_monomials(W, d);
        if (monos.empty()) {
            if (pphi.coeff(d) != 0)
                throw std::runtime_error(
                    "basis_phi: empty weight slice where the Poincaré series "
                    "expects dimension " + rat_to_string(pphi.coeff(d)));
            continue;
        }
        EchelonSpan span = phi_slice_span(S, d);
        std::vector<bool> pivot(monos.size(), false);
        for (size_t p : span.pivots()) pivot[p] = true;
        long dim = 0;
        for (size_t c = 0; c < monos.size(); ++c)
            if (!pivot[c]) {
                B.elements.push_back({Poly::monomial(monos[c]), d});
                ++dim;
            }
        if (dim != pphi.coeff(d))
            throw std::runtime_error(
                "basis_phi: weight-" + std::to_string(d) + " dimension " +
                std::to_string(dim) + " does not match the Poincaré series (" +
                rat_to_string(pphi.coeff(d)) +
                "): not an isolated singularity in this weight range, or a bug");
    }
    if (static_cast<long>(B.elements.size()) != mu)
        throw std::runtime_error(
            "basis_phi: count " + std::to_string(B.elements.size()) +
            " does not match the Milnor number " + std::to_string(mu) +
            ": not an isolated singularity in this weight range, or a bug");
    return B;
}

RatVec TwoFormSlice::vectorize(const DiffForm& f) const {
    if (f.degree() != 2)
        throw std::invalid_argument("TwoFormSlice::vectorize: not a 2-form");
    RatVec v(dim, Rat(0));
    for (size_t i = 0; i < 3; ++i) {
        for (const auto& [m, c] : f.comp(i).terms()) {
            auto it = std::find(block[i].begin(), block[i].end(), m);
            if (it == block[i].end())
                throw std::runtime_error(
                    "TwoFormSlice::vectorize: form leaves the weight-" +
                    std::to_string(weight) + " slice");
            v[offset[i] + static_cast<size_t>(it - block[i].begin())] += c;
        }
    }
    return v;
}

DiffForm TwoFormSlice::form(const RatVec& v) const {
    if (v.size() != dim)
        throw std::invalid_argument("TwoFormSlice::form: wrong dimension");
    DiffForm f(2);
    for (size_t i = 0; i < 3; ++i)
        for (size_t t = 0; t < block[i].size(); ++t) {
            const Rat& c = v[offset[i] + t];
            if (c != 0) f.comp(i) += Poly(c) * Poly::monomial(block[i][t]);
        }
    return f;
}

TwoFormSlice two_form_slice(const SingularitySpec& S, long d) {
    const WeightSystem& W = S.W;
    const long wsum = W.weight_sum();

    TwoFormSlice ts;
    ts.weight = d;
    size_t total = 0;
    for (int i = 0; i < 3; ++i) {
        ts.block[i] = enumerate_monomials(W, d - (wsum - W.w(i)));
        ts.offset[i] = total;
        total += ts.block[i].size();
    }
    ts.dim = total;
    ts.submodule = EchelonSpan(total);
    if (total == 0) return ts;

    const DiffForm df1 = exterior_derivative(S.f1);
    const DiffForm df2 = exterior_derivative(S.f2);
    for (const DiffForm* df : {&df1, &df2}) {
        long pf = (df == &df1) ? W.p(0) : W.p(1);
        for (int j = 0; j < 3; ++j)
            for (const Monomial& g : enumerate_monomials(W, d - pf - W.w(j)))
                ts.submodule.insert(ts.vectorize(
                    wedge(*df, DiffForm::basis_form(1, static_cast<size_t>(j),
                                                    Poly::monomial(g)))));
    }
    for (const Monomial& h : enumerate_monomials(W, d - wsum))
        ts.submodule.insert(ts.vectorize(euler_contraction(
            W, DiffForm::basis_form(3, 0, Poly::monomial(h)))));
    return ts;
}

GradedBasis basis_F(const SingularitySpec& S) {
    const long mu = milnor_number(S.W);
    const long N = poincare_min_truncation(S.W);
    const SeriesQ pv = poincare_V(S.W, N);
    const long bound = pv.degree();

    GradedBasis B;
    B.kind = BasisKind::F;
    for (long d = 0; d <= bound; ++d) {
        const TwoFormSlice ts = two_form_slice(S, d);
        if (ts.dim == 0) {
            if (pv.coeff(d) != 0)
                throw std::runtime_error(
                    "basis_F: empty weight slice where the Poincaré series "
                    "expects dimension " + rat_to_string(pv.coeff(d)));
            continue;
        }

        std::vector<bool> pivot(ts.dim, false);
        for (size_t p : ts.submodule.pivots()) pivot[p] = true;
        long dim = 0;
        for (size_t i = 0; i < 3; ++i)
            for (size_t t = 0; t < ts.block[i].size(); ++t) {
                size_t c = ts.offset[i] + t;
                if (!pivot[c]) {
                    B.elements.push_back(
                        {DiffForm::basis_form(2, i, Poly::monomial(ts.block[i][t])),
                         d});
                    ++dim;
                }
            }
        if (dim != pv.coeff(d))
            throw std::runtime_error(
                "basis_F: weight-" + std::to_string(d) + " dimension " +
                std::to_string(dim) + " does not match the Poincaré series (" +
                rat_to_string(pv.coeff(d)) +
                "): not an isolated singularity in this weight range, or a bug");
    }
    if (static_cast<long>(B.elements.size()) != mu)
        throw std::runtime_error(
            "basis_F: count " + std::to_string(B.elements.size()) +
            " does not match the Milnor number " + std::to_string(mu) +
            ": not an isolated singularity in this weight range, or a bug");
    return B;
}

Poly jacobian_bracket(const SingularitySpec& S, const Poly& g) {
    Poly rows[3][3];
    for (int c = 0; c < 3; ++c) {
        rows[0][c] = S.f1.derivative(c);
        rows[1][c] = S.f2.derivative(c);
        rows[2][c] = g.derivative(c);
    }
    Poly det;
    const int perm[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                            {2, 1, 0, -1}, {1, 0, 2, -1}, {0, 2, 1, -1}};
    for (const auto& p : perm) {
        Poly term = rows[0][p[0]] * rows[1][p[1]] * rows[2][p[2]];
        if (p[3] > 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace gms

/*
 * poly.hpp
 * --------
 * Sparse polynomials in x1,x2,x3 over exact rationals.  Terms live in
 * a map keyed by exponent triple in the canonical graded order, so
 * iteration (and therefore printing) is deterministic.
 *
 * Text form: terms joined by " + " / " - ", each term
 * "coeff * x1^a1 x2^a2 x3^a3" with unit coefficients, "^1" and zero
 * exponents omitted, e.g. "x1^2 + x2^3 + x3^3", "2 * x1 x3".
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gms/rational.hpp"
#include "gms/weights.hpp"

namespace gms {

class Poly {
  public:
    using TermMap = std::map<Monomial, Rat, MonoLess>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms_[{0, 0, 0}] = c;
    }
    static Poly monomial(const Monomial& m, const Rat& c = Rat(1)) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }
    static Poly variable(int i) {
        Monomial m{0, 0, 0};
        m.at(static_cast<size_t>(i)) = 1;
        return monomial(m);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const Rat& c, const Poly& p) {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly derivative(int var) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            int e = m.at(static_cast<size_t>(var));
            if (e == 0) continue;
            Monomial d = m;
            d.at(static_cast<size_t>(var)) = e - 1;
            r.add_term(d, c * Rat(e));
        }
        return r;
    }

    // Weighted degree when quasihomogeneous, nullopt otherwise (zero
    // polynomial reports nullopt as well: it has no degree).
    std::optional<long> quasihomogeneous_weight(const WeightSystem& W) const {
        std::optional<long> d;
        for (const auto& [m, c] : terms_) {
            (void)c;
            long dm = monomial_weight(W, m);
            if (!d)
                d = dm;
            else if (*d != dm)
                return std::nullopt;
        }
        return d;
    }

    std::string to_string() const;
    static Poly parse(const std::string& text);

  private:
    TermMap terms_;
};

// True when f is quasihomogeneous of the given weighted degree.
inline bool check_quasihomogeneous(const WeightSystem& W, const Poly& f, long degree) {
    auto d = f.quasihomogeneous_weight(W);
    return d.has_value() && *d == degree;
}

}  // namespace gms

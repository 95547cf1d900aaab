/*
 * series.hpp
 * ----------
 * Truncation-aware formal power series and Laurent series in one
 * variable t over exact rationals.
 *
 * A SeriesQ stores coefficients c[0..trunc]; binary operations produce
 * the minimum of the two truncation orders, so precision loss is
 * explicit and monotone.  Division happens only by units of the form
 * (1 - t^a), implemented exactly via the geometric-series recurrence.
 *
 * Text form: "c0 + c1*t + c2*t^2 + ... + O(t^{N+1})" with zero terms
 * omitted (a bare polynomial prints without the O-term only when asked).
 */
#pragma once

#include <string>
#include <vector>

#include "gms/rational.hpp"

namespace gms {

class SeriesQ {
  public:
    explicit SeriesQ(long trunc) : trunc_(check_trunc(trunc)), c_(static_cast<size_t>(trunc) + 1, Rat(0)) {}

    static SeriesQ one(long trunc) {
        SeriesQ s(trunc);
        s.c_[0] = 1;
        return s;
    }
    // t^a with a <= trunc.
    static SeriesQ power(long a, long trunc) {
        SeriesQ s(trunc);
        if (a <= trunc) s.c_[static_cast<size_t>(a)] = 1;
        return s;
    }

    long truncation() const { return trunc_; }
    const Rat& coeff(long n) const { return c_.at(static_cast<size_t>(n)); }
    void set_coeff(long n, const Rat& v) { c_.at(static_cast<size_t>(n)) = v; }

    SeriesQ& operator+=(const SeriesQ& o) {
        shrink_to(std::min(trunc_, o.trunc_));
        for (long n = 0; n <= trunc_; ++n) c_[static_cast<size_t>(n)] += o.c_[static_cast<size_t>(n)];
        return *this;
    }
    SeriesQ& operator-=(const SeriesQ& o) {
        shrink_to(std::min(trunc_, o.trunc_));
        for (long n = 0; n <= trunc_; ++n) c_[static_cast<size_t>(n)] -= o.c_[static_cast<size_t>(n)];
        return *this;
    }
    friend SeriesQ operator+(SeriesQ a, const SeriesQ& b) { return a += b; }
    friend SeriesQ operator-(SeriesQ a, const SeriesQ& b) { return a -= b; }

    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
        SeriesQ r(std::min(a.trunc_, b.trunc_));
        for (long i = 0; i <= r.trunc_; ++i) {
            if (a.c_[static_cast<size_t>(i)] == 0) continue;
            for (long j = 0; i + j <= r.trunc_; ++j) {
                if (b.c_[static_cast<size_t>(j)] == 0) continue;
                r.c_[static_cast<size_t>(i + j)] +=
                    a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
            }
        }
        return r;
    }
    friend SeriesQ operator*(const Rat& s, const SeriesQ& a) {
        SeriesQ r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    // Multiply by t^a (coefficients shift up; truncation preserved).
    SeriesQ shifted(long a) const {
        SeriesQ r(trunc_);
        for (long n = 0; n + a <= trunc_; ++n)
            if (n >= 0) r.c_[static_cast<size_t>(n + a)] = c_[static_cast<size_t>(n)];
        return r;
    }

    // Exact division by the unit (1 - t^a): c[n] += c[n-a] cumulatively.
    SeriesQ& divide_by_one_minus_power(long a) {
        if (a <= 0) throw std::invalid_argument("divide_by_one_minus_power needs a > 0");
        for (long n = a; n <= trunc_; ++n)
            c_[static_cast<size_t>(n)] += c_[static_cast<size_t>(n - a)];
        return *this;
    }

    // Largest exponent with nonzero coefficient (-1 when identically 0
    // up to the truncation order).
    long degree() const {
        for (long n = trunc_; n >= 0; --n)
            if (c_[static_cast<size_t>(n)] != 0) return n;
        return -1;
    }

    // Sum of all stored coefficients (the value at t=1 for a series
    // that is actually a polynomial of degree <= trunc).
    Rat value_at_one() const {
        Rat s(0);
        for (const auto& v : c_) s += v;
        return s;
    }

    bool operator==(const SeriesQ& o) const { return trunc_ == o.trunc_ && c_ == o.c_; }

    std::string to_string(bool with_order_term = true) const;

  private:
    static long check_trunc(long t) {
        if (t < 0) throw std::invalid_argument("series truncation must be >= 0");
        return t;
    }
    void shrink_to(long t) {
        trunc_ = t;
        c_.resize(static_cast<size_t>(t) + 1);
    }

    long trunc_;
    std::vector<Rat> c_;
};

// Finite Laurent object in one variable: coefficients for exponents
// low..low+size-1, each a rational.  Used for the auxiliary-variable
// expansion inside the Poincaré residue formula and anywhere a finite
// principal part shows up.
class LaurentSeriesQ {
  public:
    LaurentSeriesQ() : low_(0) {}
    LaurentSeriesQ(long low, std::vector<Rat> coeffs) : low_(low), c_(std::move(coeffs)) {}

    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
    Rat coeff(long e) const {
        if (e < low_ || e > high()) return Rat(0);
        return c_[static_cast<size_t>(e - low_)];
    }
    void add_term(long e, const Rat& v) {
        if (v == 0) return;
        if (c_.empty()) {
            low_ = e;
            c_.push_back(v);
            return;
        }
        if (e < low_) {
            c_.insert(c_.begin(), static_cast<size_t>(low_ - e), Rat(0));
            low_ = e;
        } else if (e > high()) {
            c_.resize(static_cast<size_t>(e - low_ + 1), Rat(0));
        }
        c_[static_cast<size_t>(e - low_)] += v;
    }

    friend LaurentSeriesQ operator*(const LaurentSeriesQ& a, const LaurentSeriesQ& b) {
        LaurentSeriesQ r;
        for (long i = a.low_; i <= a.high(); ++i) {
            if (a.coeff(i) == 0) continue;
            for (long j = b.low_; j <= b.high(); ++j) r.add_term(i + j, a.coeff(i) * b.coeff(j));
        }
        return r;
    }
    friend LaurentSeriesQ operator+(const LaurentSeriesQ& a, const LaurentSeriesQ& b) {
        LaurentSeriesQ r = a;
        for (long j = b.low_; j <= b.high(); ++j) r.add_term(j, b.coeff(j));
        return r;
    }

    Rat residue() const { return coeff(-1); }

  private:
    long low_;
    std::vector<Rat> c_;
};

}  // namespace gms

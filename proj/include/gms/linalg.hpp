/*
 * linalg.hpp
 * ----------
 * Small exact linear-algebra helpers over arbitrary-precision
 * rationals: an incremental row-echelon span (membership / rank), a
 * variant that tracks combination certificates so members can be
 * expressed in the original generators, and a kernel-basis routine.
 *
 * All elimination is Gauss-Jordan with exact arithmetic; pivots are
 * chosen as the first nonzero coordinate, so results are deterministic
 * for a fixed insertion order.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gms/rational.hpp"

namespace gms {

using RatVec = std::vector<Rat>;

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

// Incrementally built reduced row-echelon span of vectors of a fixed
// dimension.  insert() returns true when the vector enlarged the span.
class EchelonSpan {
public:
    explicit EchelonSpan(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }

    // Reduce v in place against the current rows.
    void reduce(RatVec& v) const {
        for (const Row& r : rows_) {
            const Rat f = v[r.pivot];
            if (f == 0) continue;
            for (size_t c = r.pivot; c < dim_; ++c) v[c] -= f * r.v[c];
        }
    }

    bool contains(RatVec v) const {
        check_dim(v);
        reduce(v);
        return is_zero_vec(v);
    }

    bool insert(RatVec v) {
        check_dim(v);
        reduce(v);
        size_t piv = dim_;
        for (size_t c = 0; c < dim_; ++c)
            if (v[c] != 0) {
                piv = c;
                break;
            }
        if (piv == dim_) return false;
        const Rat lead = v[piv];
        for (size_t c = piv; c < dim_; ++c) v[c] /= lead;
        // Keep the basis fully reduced: clear this pivot column above.
        for (Row& r : rows_) {
            const Rat f = r.v[piv];
            if (f == 0) continue;
            for (size_t c = piv; c < dim_; ++c) r.v[c] -= f * v[c];
        }
        size_t at = 0;
        while (at < rows_.size() && rows_[at].pivot < piv) ++at;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at),
                     Row{piv, std::move(v)});
        return true;
    }

    // Pivot columns in ascending order.
    std::vector<size_t> pivots() const {
        std::vector<size_t> p;
        p.reserve(rows_.size());
        for (const Row& r : rows_) p.push_back(r.pivot);
        return p;
    }

private:
    struct Row {
        size_t pivot;
        RatVec v;
    };

    void check_dim(const RatVec& v) const {
        if (v.size() != dim_)
            throw std::invalid_argument("EchelonSpan: dimension mismatch");
    }

    size_t dim_;
    std::vector<Row> rows_;
};

// Echelon span that remembers, for every reduced row, a combination of
// the inserted generators producing it, so solve() can express a
// member vector in terms of the generators (by insertion index).
class LinearCombiner {
public:
    explicit LinearCombiner(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }
    size_t generators() const { return n_gens_; }

    bool insert(RatVec v) {
        if (v.size() != dim_)
            throw std::invalid_argument("LinearCombiner: dimension mismatch");
        RatVec comb(n_gens_ + 1, Rat(0));
        comb[n_gens_] = 1;
        ++n_gens_;
        reduce(v, comb);
        size_t piv = dim_;
        for (size_t c = 0; c < dim_; ++c)
            if (v[c] != 0) {
                piv = c;
                break;
            }
        if (piv == dim_) return false;
        const Rat lead = v[piv];
        for (size_t c = piv; c < dim_; ++c) v[c] /= lead;
        for (Rat& x : comb) x /= lead;
        for (Row& r : rows_) {
            const Rat f = r.v[piv];
            if (f == 0) continue;
            for (size_t c = piv; c < dim_; ++c) r.v[c] -= f * v[c];
            r.comb.resize(n_gens_, Rat(0));
            for (size_t g = 0; g < n_gens_; ++g) r.comb[g] -= f * comb[g];
        }
        size_t at = 0;
        while (at < rows_.size() && rows_[at].pivot < piv) ++at;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at),
                     Row{piv, std::move(v), std::move(comb)});
        return true;
    }

    // Coefficients over the inserted generators reproducing b, if b
    // lies in the span.
    std::optional<RatVec> solve(RatVec b) const {
        if (b.size() != dim_)
            throw std::invalid_argument("LinearCombiner: dimension mismatch");
        RatVec comb(n_gens_, Rat(0));
        reduce(b, comb);
        if (!is_zero_vec(b)) return std::nullopt;
        // reduce() accumulates the coefficients of the subtraction steps,
        // i.e. b + comb·gens = 0; flip to the expansion of b itself.
        for (Rat& c : comb) c = -c;
        return comb;
    }

    bool contains(RatVec b) const { return solve(std::move(b)).has_value(); }

private:
    struct Row {
        size_t pivot;
        RatVec v;
        RatVec comb;  // row.v expressed over the inserted generators
    };

    void reduce(RatVec& v, RatVec& comb) const {
        for (const Row& r : rows_) {
            const Rat f = v[r.pivot];
            if (f == 0) continue;
            for (size_t c = r.pivot; c < dim_; ++c) v[c] -= f * r.v[c];
            for (size_t g = 0; g < r.comb.size(); ++g)
                comb[g] -= f * r.comb[g];
        }
    }

    size_t dim_;
    size_t n_gens_ = 0;
    std::vector<Row> rows_;
};

// Basis of { x : M x = 0 } for a dense constraint matrix (rows are
// constraints over `dim` coordinates).  The basis is the canonical one
// obtained from reduced row echelon form: one vector per free column,
// ordered by that column index, with a 1 in the free coordinate.
inline std::vector<RatVec> kernel_basis(std::vector<RatVec> rows,
                                        size_t dim) {
    for (const RatVec& r : rows)
        if (r.size() != dim)
            throw std::invalid_argument("kernel_basis: dimension mismatch");
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < dim && rank < rows.size(); ++col) {
        size_t sel = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const Rat lead = rows[rank][col];
        for (size_t c = col; c < dim; ++c) rows[rank][c] /= lead;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const Rat f = rows[r][col];
            if (f == 0) continue;
            for (size_t c = col; c < dim; ++c)
                rows[r][c] -= f * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(dim, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RatVec x(dim, Rat(0));
        x[free] = 1;
        for (size_t r = 0; r < rank; ++r)
            x[pivot_col[r]] = -rows[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace gms

/*
 * graded_oracle.cpp
 * -----------------
 * Independent brute-force computation of the graded data the main
 * library must reproduce: for each hard-coded curve, the weight
 * multiset of a monomial basis of the local algebra
 *     Phi = O / (2x2 Jacobian minors, f1, f2)
 * and the weight multiset of the 2-form module
 *     F = Omega^2 / (df1 ^ Omega^1 + df2 ^ Omega^1 + i_E Omega^3).
 *
 * Everything here is deliberately primitive: dense Gaussian
 * elimination over exact rationals on one weight slice at a time,
 * with no code shared with the library under test.  Output is frozen
 * into the unit tests as expected values.
 */
#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using Q = mpq_class;
using Mono = std::array<int, 3>;
using PolyT = std::map<Mono, long>;  // monomial -> integer coefficient

struct Curve {
    std::string name;
    std::array<long, 3> w;
    PolyT f1, f2;
    long mu_expected;  // -1 when unknown
};

static PolyT poly(std::vector<std::pair<Mono, long>> terms) {
    PolyT p;
    for (auto& [m, c] : terms) p[m] += c;
    return p;
}

static long wt(const std::array<long, 3>& w, const Mono& m) {
    return m[0] * w[0] + m[1] * w[1] + m[2] * w[2];
}

static PolyT deriv(const PolyT& f, int v) {
    PolyT d;
    for (auto& [m, c] : f) {
        if (m[static_cast<size_t>(v)] == 0) continue;
        Mono n = m;
        n[static_cast<size_t>(v)] -= 1;
        d[n] += c * m[static_cast<size_t>(v)];
    }
    return d;
}

static PolyT mul_mono(const PolyT& f, const Mono& g) {
    PolyT r;
    for (auto& [m, c] : f) r[{m[0] + g[0], m[1] + g[1], m[2] + g[2]}] = c;
    return r;
}

// All monomials of exact weighted degree v.
static std::vector<Mono> monos_of_weight(const std::array<long, 3>& w, long v) {
    std::vector<Mono> out;
    if (v < 0) return out;
    for (long a = 0; a * w[0] <= v; ++a)
        for (long b = 0; a * w[0] + b * w[1] <= v; ++b) {
            long rem = v - a * w[0] - b * w[1];
            if (rem % w[2] == 0)
                out.push_back({static_cast<int>(a), static_cast<int>(b),
                               static_cast<int>(rem / w[2])});
        }
    return out;
}

static size_t rank_of(std::vector<std::vector<Q>> rows) {
    size_t rank = 0;
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t sel = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) { sel = r; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Q f = rows[r][c] / rows[rank][c];
            for (size_t cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// dim of the weight-v slice of O / (minors, f1, f2).
static long phi_slice_dim(const Curve& cv, long v) {
    std::vector<Mono> basis = monos_of_weight(cv.w, v);
    if (basis.empty()) return 0;
    std::map<Mono, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    std::vector<PolyT> gens;
    PolyT d1[3], d2[3];
    for (int i = 0; i < 3; ++i) {
        d1[i] = deriv(cv.f1, i);
        d2[i] = deriv(cv.f2, i);
    }
    // 2x2 minors of the Jacobian, columns i<j.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            PolyT m;
            for (auto& [ma, ca] : d1[i])
                for (auto& [mb, cb] : d2[j])
                    m[{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}] += ca * cb;
            for (auto& [ma, ca] : d1[j])
                for (auto& [mb, cb] : d2[i])
                    m[{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}] -= ca * cb;
            gens.push_back(m);
        }
    gens.push_back(cv.f1);
    gens.push_back(cv.f2);

    std::vector<std::vector<Q>> rows;
    for (const PolyT& g : gens) {
        long wg = -1;
        for (auto& [m, c] : g)
            if (c != 0) { wg = wt(cv.w, m); break; }
        if (wg < 0) continue;
        for (const Mono& shift : monos_of_weight(cv.w, v - wg)) {
            PolyT prod = mul_mono(g, shift);
            std::vector<Q> row(basis.size(), Q(0));
            bool ok = true;
            for (auto& [m, c] : prod) {
                if (c == 0) continue;
                auto it = index.find(m);
                if (it == index.end()) { ok = false; break; }
                row[it->second] += c;
            }
            if (!ok) {
                std::fprintf(stderr, "%s: inhomogeneous generator at weight %ld\n",
                             cv.name.c_str(), v);
                std::exit(1);
            }
            rows.push_back(std::move(row));
        }
    }
    return static_cast<long>(basis.size()) - static_cast<long>(rank_of(std::move(rows)));
}

// dim of the weight-v slice of Omega^2 / (df1^Omega^1 + df2^Omega^1 + i_E Omega^3).
// 2-form basis order: e1 = dx2^dx3, e2 = dx3^dx1, e3 = dx1^dx2, with
// form weight of (g, e_i) equal to w(g) + |w| - w_i.
static long fmod_slice_dim(const Curve& cv, long v) {
    long wsum = cv.w[0] + cv.w[1] + cv.w[2];
    std::vector<Mono> block[3];
    std::map<Mono, size_t> index[3];
    size_t offset[3], total = 0;
    for (int i = 0; i < 3; ++i) {
        block[i] = monos_of_weight(cv.w, v - (wsum - cv.w[static_cast<size_t>(i)]));
        offset[i] = total;
        for (size_t t = 0; t < block[i].size(); ++t) index[i][block[i][t]] = t;
        total += block[i].size();
    }
    if (total == 0) return 0;

    std::vector<std::vector<Q>> rows;
    auto push_form = [&](const std::array<PolyT, 3>& comp) {
        std::vector<Q> row(total, Q(0));
        for (int i = 0; i < 3; ++i)
            for (auto& [m, c] : comp[static_cast<size_t>(i)]) {
                if (c == 0) continue;
                auto it = index[i].find(m);
                if (it == index[i].end()) {
                    std::fprintf(stderr, "%s: inhomogeneous 2-form at weight %ld\n",
                                 cv.name.c_str(), v);
                    std::exit(1);
                }
                row[offset[i] + it->second] += c;
            }
        rows.push_back(std::move(row));
    };

    // df ^ (g dx_j): components in (e1,e2,e3) with fi = df/dx_i:
    //   j=1: (0, f3 g, -f2 g);  j=2: (-f3 g, 0, f1 g);  j=3: (f2 g, -f1 g, 0).
    for (const PolyT* f : {&cv.f1, &cv.f2}) {
        PolyT fd[3];
        long pf = 0;
        for (int i = 0; i < 3; ++i) fd[i] = deriv(*f, i);
        for (auto& [m, c] : *f)
            if (c != 0) { pf = wt(cv.w, m); break; }
        for (int j = 0; j < 3; ++j) {
            long need = v - pf - cv.w[static_cast<size_t>(j)];
            for (const Mono& g : monos_of_weight(cv.w, need)) {
                std::array<PolyT, 3> comp;
                if (j == 0) {
                    comp[1] = mul_mono(fd[2], g);
                    for (auto& [m, c] : mul_mono(fd[1], g)) comp[2][m] -= c;
                } else if (j == 1) {
                    for (auto& [m, c] : mul_mono(fd[2], g)) comp[0][m] -= c;
                    comp[2] = mul_mono(fd[0], g);
                } else {
                    comp[0] = mul_mono(fd[1], g);
                    for (auto& [m, c] : mul_mono(fd[0], g)) comp[1][m] -= c;
                }
                push_form(comp);
            }
        }
    }
    // i_E(h dx1^dx2^dx3) = h (w1 x1 e1 + w2 x2 e2 + w3 x3 e3).
    for (const Mono& h : monos_of_weight(cv.w, v - wsum)) {
        std::array<PolyT, 3> comp;
        for (int i = 0; i < 3; ++i) {
            Mono m = h;
            m[static_cast<size_t>(i)] += 1;
            comp[static_cast<size_t>(i)][m] = cv.w[static_cast<size_t>(i)];
        }
        push_form(comp);
    }
    return static_cast<long>(total) - static_cast<long>(rank_of(std::move(rows)));
}

static std::string fmt_multiset(const std::vector<long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

int main() {
    const Mono X1{1, 0, 0}, X2{0, 1, 0}, X3{0, 0, 1};
    auto mono = [](int a, int b, int c) { return Mono{a, b, c}; };
    (void)X1; (void)X2; (void)X3;

    std::vector<Curve> curves = {
        {"S5", {1, 1, 1},
         poly({{mono(2,0,0),1}, {mono(0,2,0),1}, {mono(0,0,2),1}}), poly({{mono(0,1,1),1}}), 5},
        {"S6", {3, 3, 2},
         poly({{mono(2,0,0),1}, {mono(0,2,0),1}, {mono(0,0,3),1}}), poly({{mono(0,1,1),1}}), 6},
        {"S7", {2, 2, 1},
         poly({{mono(2,0,0),1}, {mono(0,2,0),1}, {mono(0,0,4),1}}), poly({{mono(0,1,1),1}}), 7},
        {"T7", {3, 2, 2},
         poly({{mono(2,0,0),1}, {mono(0,3,0),1}, {mono(0,0,3),1}}), poly({{mono(0,1,1),1}}), 7},
        {"T8", {6, 4, 3},
         poly({{mono(2,0,0),1}, {mono(0,3,0),1}, {mono(0,0,4),1}}), poly({{mono(0,1,1),1}}), 8},
        {"T9", {15, 10, 6},
         poly({{mono(2,0,0),1}, {mono(0,3,0),1}, {mono(0,0,5),1}}), poly({{mono(0,1,1),1}}), 9},
        // U/W entries are stored with the higher-degree equation first.
        {"U7", {4, 5, 3},
         poly({{mono(1,1,0),1}, {mono(0,0,3),1}}), poly({{mono(2,0,0),1}, {mono(0,1,1),1}}), 7},
        {"U8", {3, 4, 2},
         poly({{mono(1,1,0),1}}), poly({{mono(2,0,0),1}, {mono(0,1,1),1}, {mono(0,0,3),1}}), 8},
        {"U9", {5, 7, 3},
         poly({{mono(1,1,0),1}, {mono(0,0,4),1}}), poly({{mono(2,0,0),1}, {mono(0,1,1),1}}), 9},
        {"W8", {6, 5, 4},
         poly({{mono(2,0,0),1}, {mono(0,0,3),1}}), poly({{mono(0,2,0),1}, {mono(1,0,1),1}}), 8},
        {"W9", {5, 4, 3},
         poly({{mono(2,0,0),1}, {mono(0,1,2),1}}), poly({{mono(0,2,0),1}, {mono(1,0,1),1}}), 9},
        {"Z9", {3, 3, 2},
         poly({{mono(2,0,0),1}, {mono(0,2,0),1}, {mono(0,0,3),1}}), poly({{mono(1,1,0),1}}), 9},
        {"Z10", {7, 6, 4},
         poly({{mono(2,0,0),1}, {mono(0,1,2),1}}), poly({{mono(0,2,0),1}, {mono(0,0,3),1}}), 10},
        {"P22", {1, 1, 1},
         poly({{mono(2,0,0),1}, {mono(0,2,0),1}, {mono(0,0,2),1}}), poly({{mono(1,1,0),1}}), 5},
        {"P32", {2, 3, 3},
         poly({{mono(3,0,0),1}, {mono(0,2,0),1}, {mono(0,0,2),1}}), poly({{mono(1,1,0),1}}), 6},
        {"G9", {3, 3, 2},
         poly({{mono(2,0,0),1}, {mono(0,0,3),1}}), poly({{mono(0,2,0),1}, {mono(0,0,3),1}}), -1},
        {"G12", {9, 6, 4},
         poly({{mono(2,0,0),1}, {mono(0,1,3),1}}), poly({{mono(0,2,0),1}, {mono(0,0,3),1}}), -1},
        {"FZ12", {8, 3, 4},
         poly({{mono(1,0,1),1}, {mono(0,0,3),1}, {mono(0,4,0),1}}), poly({{mono(1,1,0),1}}), 12},
        {"FZ14", {10, 3, 5},
         poly({{mono(1,0,1),1}, {mono(0,0,3),1}, {mono(0,5,0),1}}), poly({{mono(1,1,0),1}}), 14},
        {"U11", {2, 3, 1},
         poly({{mono(1,1,0),1}, {mono(0,0,5),1}}), poly({{mono(2,0,0),1}, {mono(0,1,1),1}}), 11},
        {"FW13", {11, 4, 5},
         poly({{mono(1,0,1),1}, {mono(0,4,0),1}}), poly({{mono(1,1,0),1}, {mono(0,0,3),1}}), 13},
        {"FW19", {17, 4, 7},
         poly({{mono(1,0,1),1}, {mono(0,6,0),1}}), poly({{mono(1,1,0),1}, {mono(0,0,3),1}}), 19},
        {"K13", {7, 3, 5},
         poly({{mono(2,0,0),1}, {mono(0,3,1),1}}), poly({{mono(1,1,0),1}, {mono(0,0,2),1}}), 13},
        {"K14", {10, 4, 7},
         poly({{mono(2,0,0),1}, {mono(0,5,0),1}}), poly({{mono(1,1,0),1}, {mono(0,0,2),1}}), 14},
        {"HD13", {7, 5, 4},
         poly({{mono(2,0,0),1}, {mono(0,2,1),1}}), poly({{mono(1,1,0),1}, {mono(0,0,3),1}}), 13},
        {"HD14", {9, 6, 5},
         poly({{mono(2,0,0),1}, {mono(0,3,0),1}}), poly({{mono(1,1,0),1}, {mono(0,0,3),1}}), 14},
        {"FT44", {2, 1, 1},
         poly({{mono(1,1,0),1}, {mono(0,0,3),1}}),
         poly({{mono(1,0,1),1}, {mono(0,3,0),1}, {mono(0,1,2),1}}), 10},
        {"NR235", {15, 10, 6},
         poly({{mono(2,0,0),1}, {mono(0,3,0),1}, {mono(0,0,5),1}}), poly({{mono(1,1,0),1}}), -1},
    };

    for (const Curve& cv : curves) {
        long wsum = cv.w[0] + cv.w[1] + cv.w[2];
        long p1 = 0, p2 = 0;
        for (auto& [m, c] : cv.f1)
            if (c != 0) { p1 = wt(cv.w, m); break; }
        for (auto& [m, c] : cv.f2)
            if (c != 0) { p2 = wt(cv.w, m); break; }
        long D = p1 + p2 - wsum;
        long wmax = std::max({cv.w[0], cv.w[1], cv.w[2]});

        std::vector<long> phi_weights;
        for (long v = 0; v <= 2 * D + wmax + 2; ++v) {
            long d = phi_slice_dim(cv, v);
            for (long t = 0; t < d; ++t) phi_weights.push_back(v);
            if (d != 0 && v > 2 * D)
                std::printf("%s WARNING phi slice nonzero beyond 2D at %ld\n",
                            cv.name.c_str(), v);
        }

        std::vector<long> f_weights;
        long fbound = p1 + p2 + p1 - wsum + wmax + 2;
        for (long v = 0; v <= fbound; ++v) {
            long d = fmod_slice_dim(cv, v);
            for (long t = 0; t < d; ++t) f_weights.push_back(v);
            if (d != 0 && v > p1 + p2 + p1 - wsum)
                std::printf("%s WARNING F slice nonzero beyond bound at %ld\n",
                            cv.name.c_str(), v);
        }

        std::printf("%s mu=%zu%s D=%ld\n", cv.name.c_str(), phi_weights.size(),
                    (cv.mu_expected >= 0 &&
                     static_cast<long>(phi_weights.size()) != cv.mu_expected)
                        ? " MISMATCH"
                        : "",
                    D);
        std::printf("%s phi: %s\n", cv.name.c_str(), fmt_multiset(phi_weights).c_str());
        std::printf("%s F: %s\n", cv.name.c_str(), fmt_multiset(f_weights).c_str());
        if (f_weights.size() != phi_weights.size())
            std::printf("%s WARNING F count %zu != mu %zu\n", cv.name.c_str(),
                        f_weights.size(), phi_weights.size());
    }
    return 0;
}

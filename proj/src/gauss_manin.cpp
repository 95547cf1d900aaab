#include "gms/gauss_manin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gms/linalg.hpp"

namespace gms {

namespace {

// ---------------------------------------------------------------------------
// Weight-slice solver for the module expansion.
//
// For a fixed coefficient weight d the expansion
//   g = Σ c_{abj} f1^a f2^b φ_j + Σ_α λ_α · det ∂(f1,f2,x^α)/∂(x1,x2,x3)
// is a linear system over the monomials of weight d.  The Jacobian
// determinants are inserted into the combiner first: they may be mutually
// dependent, and dependent generators never receive a nonzero coefficient
// in a solution certificate, so the c_{abj} read off afterwards are exactly
// the coefficients over the free module generators.  Each product
// generator, by contrast, must enlarge the span — otherwise the expansion
// would not be unique.

struct Slice {
    std::vector<Monomial> monos;          // coordinates of the slice
    std::map<Monomial, size_t> pos;       // monomial -> coordinate
    LinearCombiner combiner;
    size_t first_product = 0;             // generator index of products[0]
    // (a, b, j): generator f1^a f2^b φ_j, in insertion order.
    std::vector<std::tuple<long, long, size_t>> products;

    Slice() : combiner(0) {}
};

class BrieskornSolver {
  public:
    BrieskornSolver(const SingularitySpec& spec, const GradedBasis& phi)
        : spec_(spec), phi_(phi) {}

    const Slice& slice(long d) {
        auto it = cache_.find(d);
        if (it != cache_.end()) return it->second;
        Slice s;
        s.monos = enumerate_monomials(spec_.W, d);
        for (size_t i = 0; i < s.monos.size(); ++i) s.pos[s.monos[i]] = i;
        s.combiner = LinearCombiner(s.monos.size());

        size_t n_gens = 0;
        // 1. Jacobian determinant generators.
        const long top = spec_.W.top_weight();
        for (const Monomial& alpha : enumerate_monomials(spec_.W, d - top)) {
            Poly br = jacobian_bracket(spec_, Poly::monomial(alpha));
            if (br.is_zero()) continue;
            s.combiner.insert(vectorize(s, br));
            ++n_gens;
        }
        s.first_product = n_gens;

        // 2. Free-module generators f1^a f2^b φ_j.
        const long p1 = spec_.W.p(0);
        const long p2 = spec_.W.p(1);
        for (size_t j = 0; j < phi_.size(); ++j) {
            const long need = d - phi_.weight(j);
            if (need < 0) continue;
            for (long a = 0; a * p1 <= need; ++a) {
                const long rem = need - a * p1;
                if (rem % p2 != 0) continue;
                const long b = rem / p2;
                Poly gen = phi_.poly_repr(j);
                for (long t = 0; t < a; ++t) gen = gen * spec_.f1;
                for (long t = 0; t < b; ++t) gen = gen * spec_.f2;
                if (!s.combiner.insert(vectorize(s, gen))) {
                    std::ostringstream msg;
                    msg << "brieskorn_decompose: expansion is not unique in "
                           "weight slice "
                        << d << " (generator s1^" << a << " s2^" << b
                        << " * basis[" << j
                        << "] is dependent; free-module structure violated)";
                    throw std::runtime_error(msg.str());
                }
                s.products.emplace_back(a, b, j);
            }
        }
        return cache_.emplace(d, std::move(s)).first->second;
    }

    static RatVec vectorize(const Slice& s, const Poly& g) {
        RatVec v(s.monos.size(), Rat(0));
        for (const auto& [m, c] : g.terms()) {
            auto it = s.pos.find(m);
            if (it == s.pos.end()) {
                throw std::logic_error(
                    "brieskorn_decompose: monomial outside its weight slice");
            }
            v[it->second] = c;
        }
        return v;
    }

    std::vector<BivariatePoly> decompose(const Poly& g) {
        std::vector<BivariatePoly> row(phi_.size());
        if (g.is_zero()) return row;
        auto d = g.quasihomogeneous_weight(spec_.W);
        if (!d) {
            throw std::invalid_argument(
                "brieskorn_decompose: coefficient polynomial is not "
                "quasihomogeneous");
        }
        const Slice& s = slice(*d);
        auto cert = s.combiner.solve(vectorize(s, g));
        if (!cert) {
            throw std::runtime_error(
                "brieskorn_decompose: inconsistent system (the form is not "
                "in the module span; invalid input or internal error)");
        }
        for (size_t t = 0; t < s.products.size(); ++t) {
            const Rat& c = (*cert)[s.first_product + t];
            if (c == 0) continue;
            const auto& [a, b, j] = s.products[t];
            row[j] += BivariatePoly::monomial(a, b, c);
        }
        return row;
    }

  private:
    const SingularitySpec& spec_;
    const GradedBasis& phi_;
    std::map<long, Slice> cache_;
};

using PolyRow = std::vector<BivariatePoly>;

// Flattened coordinates of a row over its support triples (column j,
// s1-exponent a, s2-exponent b), used by the representative search.
using Triple = std::tuple<size_t, long, long>;

std::vector<Triple> support_union(const std::vector<PolyRow>& rows) {
    std::set<Triple> seen;
    for (const PolyRow& row : rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            for (const auto& [e, c] : row[j].terms()) {
                (void)c;
                seen.emplace(j, e.first, e.second);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// coords[t][c] = coefficient of triple t in rows[c].
std::vector<RatVec> triple_coords(const std::vector<Triple>& triples,
                                  const std::vector<PolyRow>& rows) {
    std::vector<RatVec> coords(triples.size(), RatVec(rows.size(), Rat(0)));
    for (size_t t = 0; t < triples.size(); ++t) {
        const auto& [j, a, b] = triples[t];
        for (size_t c = 0; c < rows.size(); ++c) {
            coords[t][c] = rows[c][j].coeff(a, b);
        }
    }
    return coords;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Chooses, inside one weight slice of the 2-form module, representatives
// whose rows under both wedge maps are supported on single monomials
// wherever the slice admits such representatives.  The search ranges over
// the full slice coordinate space — not just combinations of the canonical
// quotient basis — because shifting a representative by a relation-module
// element changes its rows.  A candidate is a kernel vector of "all row
// coordinates outside one chosen support triple per matrix vanish"; it is
// accepted when it is independent modulo the relation module plus the
// representatives already chosen, preferring supports whose entry columns
// are fresh.  Any shortfall is filled with the canonical generators,
// leaving rows that the normal form will honestly refuse.
std::vector<RatVec> choose_slice_representatives(
    const std::vector<Triple>& tr1, const std::vector<RatVec>& r1,
    const std::vector<Triple>& tr2, const std::vector<RatVec>& r2,
    size_t q, const EchelonSpan& submodule,
    const std::vector<size_t>& raw_units, std::vector<bool>& used_col1,
    std::vector<bool>& used_col2) {
    const size_t dim = submodule.dim();
    std::vector<RatVec> chosen;
    EchelonSpan occupied = submodule;

    constexpr size_t kNone = static_cast<size_t>(-1);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t t1 = 0; t1 < tr1.size(); ++t1) {
        for (size_t t2 = 0; t2 < tr2.size(); ++t2) pairs.emplace_back(t1, t2);
    }
    for (size_t t1 = 0; t1 < tr1.size(); ++t1) pairs.emplace_back(t1, kNone);
    for (size_t t2 = 0; t2 < tr2.size(); ++t2) pairs.emplace_back(kNone, t2);
    pairs.emplace_back(kNone, kNone);

    // Pass 0 keeps both entry columns unused, pass 1 only the first, pass 2
    // drops the preference entirely.  Oversized slices skip straight to the
    // canonical generators rather than paying a quadratic pair sweep.
    const bool tractable = pairs.size() <= 2500;
    for (int pass = 0; tractable && pass < 3 && chosen.size() < q; ++pass) {
        for (const auto& [t1, t2] : pairs) {
            if (chosen.size() == q) break;
            std::vector<RatVec> constraints;
            for (size_t t = 0; t < tr1.size(); ++t) {
                if (t != t1) constraints.push_back(r1[t]);
            }
            for (size_t t = 0; t < tr2.size(); ++t) {
                if (t != t2) constraints.push_back(r2[t]);
            }
            for (const RatVec& k : kernel_basis(constraints, dim)) {
                if (chosen.size() == q) break;
                const Rat c1 = t1 == kNone ? Rat(0) : dot(r1[t1], k);
                const Rat c2 = t2 == kNone ? Rat(0) : dot(r2[t2], k);
                const size_t col1 =
                    c1 != 0 ? std::get<0>(tr1[t1]) : kNone;
                const size_t col2 =
                    c2 != 0 ? std::get<0>(tr2[t2]) : kNone;
                if (pass < 2 && col1 != kNone && used_col1[col1]) continue;
                if (pass < 1 && col2 != kNone && used_col2[col2]) continue;
                if (!occupied.insert(k)) continue;
                chosen.push_back(k);
                if (col1 != kNone) used_col1[col1] = true;
                if (col2 != kNone) used_col2[col2] = true;
            }
        }
    }

    // Honest fallback: complete with the canonical generators.
    for (size_t c = 0; c < raw_units.size() && chosen.size() < q; ++c) {
        RatVec unit(dim, Rat(0));
        unit[raw_units[c]] = 1;
        if (occupied.insert(unit)) chosen.push_back(std::move(unit));
    }
    if (chosen.size() != q) {
        throw std::logic_error(
            "gm_matrices: representative search failed to span a slice");
    }
    return chosen;
}

BivariatePoly exact_det(const std::vector<std::vector<BivariatePoly>>& a) {
    BivariatePoly det = det_bareiss(a);
    if (a.size() <= 8 && !(det == det_cofactor(a))) {
        throw std::logic_error(
            "determinant cross-check failed: elimination and cofactor "
            "expansion disagree");
    }
    return det;
}

// Number of support triples (column, a, b) in a row beyond the first; a
// row enters the single-entry normal form exactly when this is zero.
size_t row_excess(const PolyRow& row) {
    size_t triples = 0;
    for (const BivariatePoly& e : row) triples += e.term_count();
    return triples > 1 ? triples - 1 : 0;
}

// One full computation of the coefficient matrices for a given choice of
// the contact-algebra basis.  `bad` counts rows (over both matrices) that
// fail to be supported on a single monomial.
struct RowsAttempt {
    std::vector<PolyRow> P1, P2;
    std::vector<DiffForm> reps;
    std::vector<long> L_V;
    size_t bad = 0;
};

RowsAttempt attempt_rows(const SingularitySpec& spec, const GradedBasis& phi,
                         const GradedBasis& rawF) {
    RowsAttempt out;
    const size_t mu = phi.size();
    BrieskornSolver solver(spec, phi);
    const DiffForm df1 = exterior_derivative(spec.f1);
    const DiffForm df2 = exterior_derivative(spec.f2);
    std::vector<bool> used_col1(mu, false), used_col2(mu, false);

    auto push = [&](DiffForm rep, PolyRow row1, PolyRow row2, long d) {
        out.bad += (row_excess(row1) > 0 ? 1 : 0) +
                   (row_excess(row2) > 0 ? 1 : 0);
        out.reps.push_back(std::move(rep));
        out.P1.push_back(std::move(row1));
        out.P2.push_back(std::move(row2));
        out.L_V.push_back(d);
    };

    for (size_t lo = 0; lo < rawF.size();) {
        const long d = rawF.weight(lo);
        size_t hi = lo;
        while (hi < rawF.size() && rawF.weight(hi) == d) ++hi;
        const size_t q = hi - lo;

        std::vector<DiffForm> raw_forms;
        std::vector<PolyRow> raw1, raw2;
        for (size_t c = lo; c < hi; ++c) {
            raw_forms.push_back(rawF.form_repr(c));
            raw1.push_back(
                solver.decompose(wedge(raw_forms.back(), df2).comp(0)));
            raw2.push_back(
                solver.decompose(wedge(raw_forms.back(), df1).comp(0)));
        }

        // Fast path: the canonical representatives already give
        // single-monomial rows on fresh entry columns.
        {
            std::vector<bool> u1 = used_col1, u2 = used_col2;
            bool clean = true;
            for (size_t c = 0; c < q && clean; ++c) {
                if (row_excess(raw1[c]) > 0 || row_excess(raw2[c]) > 0) {
                    clean = false;
                    break;
                }
                for (size_t j = 0; j < mu && clean; ++j) {
                    if (!raw1[c][j].is_zero()) {
                        if (u1[j]) clean = false;
                        u1[j] = true;
                    }
                    if (!raw2[c][j].is_zero()) {
                        if (u2[j]) clean = false;
                        u2[j] = true;
                    }
                }
            }
            if (clean) {
                used_col1 = std::move(u1);
                used_col2 = std::move(u2);
                for (size_t c = 0; c < q; ++c)
                    push(std::move(raw_forms[c]), std::move(raw1[c]),
                         std::move(raw2[c]), d);
                lo = hi;
                continue;
            }
        }

        // Full search over the slice coordinate space: a representative may
        // be shifted by any relation-module element, and such shifts change
        // the rows, so the canonical quotient basis alone is not enough.
        const TwoFormSlice ts = two_form_slice(spec, d);
        std::vector<size_t> raw_units;
        for (const DiffForm& f : raw_forms) {
            const RatVec v = ts.vectorize(f);
            size_t idx = ts.dim;
            for (size_t t = 0; t < ts.dim; ++t)
                if (v[t] != 0) {
                    idx = t;
                    break;
                }
            raw_units.push_back(idx);
        }
        std::vector<PolyRow> rows1, rows2;
        rows1.reserve(ts.dim);
        rows2.reserve(ts.dim);
        for (size_t i = 0; i < 3; ++i)
            for (const Monomial& m : ts.block[i]) {
                const DiffForm unit =
                    DiffForm::basis_form(2, i, Poly::monomial(m));
                rows1.push_back(
                    solver.decompose(wedge(unit, df2).comp(0)));
                rows2.push_back(
                    solver.decompose(wedge(unit, df1).comp(0)));
            }

        const std::vector<Triple> tr1 = support_union(rows1);
        const std::vector<Triple> tr2 = support_union(rows2);
        const std::vector<RatVec> r1 = triple_coords(tr1, rows1);
        const std::vector<RatVec> r2 = triple_coords(tr2, rows2);

        for (const RatVec& k : choose_slice_representatives(
                 tr1, r1, tr2, r2, q, ts.submodule, raw_units, used_col1,
                 used_col2)) {
            PolyRow row1(mu), row2(mu);
            for (size_t t = 0; t < ts.dim; ++t) {
                if (k[t] == 0) continue;
                for (size_t j = 0; j < mu; ++j) {
                    row1[j] += rows1[t][j] * k[t];
                    row2[j] += rows2[t][j] * k[t];
                }
            }
            push(ts.form(k), std::move(row1), std::move(row2), d);
        }
        lo = hi;
    }
    return out;
}

// Per-weight alternatives for the monomial representatives of the contact
// algebra: every subset of slice monomials completing the relation span is
// a valid choice.  Index 0 is the canonical (non-pivot-column) choice.
struct SliceOptions {
    long weight = 0;
    std::vector<std::vector<Monomial>> tuples;
};

std::vector<SliceOptions> phi_slice_options(const SingularitySpec& S,
                                            const GradedBasis& phi) {
    std::vector<SliceOptions> options;
    for (size_t lo = 0; lo < phi.size();) {
        const long d = phi.weight(lo);
        size_t hi = lo;
        while (hi < phi.size() && phi.weight(hi) == d) ++hi;
        const size_t r = hi - lo;

        const auto monos = enumerate_monomials(S.W, d);
        const EchelonSpan base = phi_slice_span(S, d);
        const size_t n = monos.size();

        // Enumerate r-subsets of columns in lexicographic order.
        std::vector<size_t> pick(r);
        for (size_t i = 0; i < r; ++i) pick[i] = i;
        SliceOptions opt;
        opt.weight = d;
        std::vector<Monomial> canonical;
        for (size_t c = lo; c < hi; ++c) {
            canonical.push_back(phi.poly_repr(c).terms().begin()->first);
        }
        for (;;) {
            EchelonSpan span = base;
            bool ok = true;
            for (size_t i : pick) {
                RatVec unit(n, Rat(0));
                unit[i] = 1;
                if (!span.insert(std::move(unit))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                std::vector<Monomial> tuple;
                for (size_t i : pick) tuple.push_back(monos[i]);
                if (tuple != canonical) opt.tuples.push_back(std::move(tuple));
            }
            // Next r-subset.
            size_t i = r;
            while (i > 0 && pick[i - 1] == n - r + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
        opt.tuples.insert(opt.tuples.begin(), canonical);
        if (opt.tuples.size() > 1) options.push_back(std::move(opt));
        lo = hi;
    }
    return options;
}

GradedBasis phi_with_choices(const GradedBasis& canonical,
                             const std::vector<SliceOptions>& options,
                             const std::vector<size_t>& choice) {
    GradedBasis phi = canonical;
    for (size_t s = 0; s < options.size(); ++s) {
        const auto& tuple = options[s].tuples[choice[s]];
        size_t t = 0;
        for (size_t c = 0; c < phi.size(); ++c) {
            if (phi.weight(c) != options[s].weight) continue;
            phi.elements[c].repr = Poly::monomial(tuple.at(t++));
        }
        if (t != tuple.size()) {
            throw std::logic_error("gm_matrices: basis slice size mismatch");
        }
    }
    return phi;
}

}  // namespace

std::vector<BivariatePoly> brieskorn_decompose(const Poly& g,
                                               const SingularitySpec& spec,
                                               const GradedBasis& phi) {
    BrieskornSolver solver(spec, phi);
    return solver.decompose(g);
}

GMSystem gm_matrices(const SingularitySpec& spec) {
    GMSystem gm;
    gm.spec = spec;
    const GradedBasis phi0 = basis_phi(spec);
    const GradedBasis rawF = basis_F(spec);
    const size_t mu = phi0.size();

    // The monomial representatives of the contact algebra are only
    // determined up to the relation span; the single-entry shape of the
    // rows can depend on the choice.  Start from the canonical basis and
    // greedily adopt per-slice alternatives while they strictly reduce the
    // number of rows that fail to be monomial.
    const std::vector<SliceOptions> options = phi_slice_options(spec, phi0);
    std::vector<size_t> choice(options.size(), 0);
    gm.phi = phi0;
    RowsAttempt best = attempt_rows(spec, gm.phi, rawF);
    int budget = 64;
    bool improved = true;
    while (best.bad > 0 && improved && budget > 0) {
        improved = false;
        for (size_t s = 0; s < options.size() && !improved; ++s) {
            for (size_t o = 0; o < options[s].tuples.size() && budget > 0;
                 ++o) {
                if (o == choice[s]) continue;
                std::vector<size_t> trial = choice;
                trial[s] = o;
                GradedBasis phi_trial = phi_with_choices(phi0, options, trial);
                RowsAttempt att = attempt_rows(spec, phi_trial, rawF);
                --budget;
                if (att.bad < best.bad) {
                    best = std::move(att);
                    choice = std::move(trial);
                    gm.phi = std::move(phi_trial);
                    improved = true;
                    break;
                }
            }
        }
    }

    gm.P1 = std::move(best.P1);
    gm.P2 = std::move(best.P2);
    gm.L_V = std::move(best.L_V);
    gm.F.kind = BasisKind::F;
    for (size_t i = 0; i < mu; ++i) {
        gm.F.elements.push_back({best.reps[i], gm.L_V[i]});
    }

    const long p1 = spec.W.p(0);
    const long p2 = spec.W.p(1);
    const long wsum = spec.W.weight_sum();
    for (size_t j = 0; j < mu; ++j) {
        gm.L_Phi.push_back(gm.phi.weight(j) - spec.W.top_weight());
    }

    // Exact weight balance of every computed entry.
    for (size_t i = 0; i < mu; ++i) {
        for (size_t j = 0; j < mu; ++j) {
            const auto check = [&](const BivariatePoly& e, long pf,
                                   const char* which) {
                if (e.is_zero()) return;
                auto w = e.quasihomogeneous_weight(p1, p2);
                const long expect =
                    gm.L_V[i] + pf - gm.phi.weight(j) - wsum;
                if (!w || *w != expect) {
                    std::ostringstream msg;
                    msg << "gm_matrices: weight imbalance in " << which
                        << " at (" << i << "," << j << ")";
                    throw std::logic_error(msg.str());
                }
            };
            check(gm.P1[i][j], p2, "P1");
            check(gm.P2[i][j], p1, "P2");
        }
    }

    gm.A.assign(mu, PolyRow(mu));
    for (size_t i = 0; i < mu; ++i) {
        for (size_t j = 0; j < mu; ++j) {
            gm.A[i][j] = gm.P1[i][j].shifted(1, 0) * Rat(p1) -
                         gm.P2[i][j].shifted(0, 1) * Rat(p2);
        }
    }
    gm.Delta = exact_det(gm.A);
    if (!gm.Delta.is_zero() &&
        !gm.Delta.quasihomogeneous_weight(p1, p2)) {
        throw std::logic_error(
            "gm_matrices: determinant is not quasihomogeneous");
    }
    return gm;
}

BivariatePoly discriminant(const GMSystem& gm) {
    BivariatePoly det = exact_det(gm.A);
    if (det.is_zero()) throw std::runtime_error("degenerate system");
    return det;
}

NormalizedGM normalize_gm(const GMSystem& gm) {
    const size_t mu = gm.P1.size();
    NormalizedGM n;
    n.mu = mu;
    n.eta.assign(mu, 0);
    n.delta.assign(mu, 0);
    n.eta_tilde.assign(mu, 0);
    n.delta_tilde.assign(mu, 0);
    n.pvals1.assign(mu, Rat(0));
    n.pvals2.assign(mu, Rat(0));
    n.j1.assign(mu, -1);
    n.j2.assign(mu, -1);
    n.L_Fprime.assign(mu, 0);

    // The single monomial entry of row i of the given matrix, or -1.
    struct Entry {
        int col = -1;
        long a = 0, b = 0;
        Rat c;
    };
    auto scan_row = [mu](const std::vector<std::vector<BivariatePoly>>& mat,
                         size_t i, const char* which) {
        Entry e;
        for (size_t j = 0; j < mu; ++j) {
            const BivariatePoly& p = mat[i][j];
            if (p.is_zero()) continue;
            if (e.col >= 0 || !p.is_monomial()) {
                std::ostringstream msg;
                msg << "normalize_gm: row " << i << " of " << which
                    << " is not supported on a single monomial; the system "
                       "has no single-entry normal form";
                throw std::runtime_error(msg.str());
            }
            const auto [exp, c] = p.leading();
            e.col = static_cast<int>(j);
            e.a = exp.first;
            e.b = exp.second;
            e.c = c;
        }
        return e;
    };

    const long p1 = gm.spec.W.p(0);
    const long p2 = gm.spec.W.p(1);
    for (size_t i = 0; i < mu; ++i) {
        const Entry e1 = scan_row(gm.P1, i, "P1");
        const Entry e2 = scan_row(gm.P2, i, "P2");
        n.j1[i] = e1.col;
        n.j2[i] = e2.col;
        n.eta[i] = e2.col >= 0 ? e2.a : 0;
        n.delta[i] = e1.col >= 0 ? e1.b : 0;
        n.eta_tilde[i] = e1.col >= 0 ? e1.a - n.eta[i] : 0;
        n.delta_tilde[i] = e2.col >= 0 ? e2.b - n.delta[i] : 0;
        if (e1.col >= 0) n.pvals1[i] = e1.c;
        if (e2.col >= 0) n.pvals2[i] = e2.c;
        n.L_Fprime[i] = gm.L_V[i] - n.eta[i] * p1 - n.delta[i] * p2;
    }
    n.lambda.reserve(mu);
    for (size_t j = 0; j < mu; ++j) {
        n.lambda.push_back(rat(gm.L_Phi[j], p1));
    }

    // Rows carrying entries in both matrices define edges j1[i] -> j2[i] on
    // columns.  A column that never occurs as a source terminates an open
    // branch: the recurrence written by its row does not close, so the edge
    // hangs off the closed part as a chain.  Peel such edges (iteratively,
    // so multi-step branches unwind leaf first) before requiring the rest
    // to identify rows through the first matrix.
    struct Edge {
        size_t from, to, row;
    };
    std::vector<Edge> edges;
    for (size_t i = 0; i < mu; ++i) {
        if (n.j1[i] >= 0 && n.j2[i] >= 0) {
            edges.push_back({static_cast<size_t>(n.j1[i]),
                             static_cast<size_t>(n.j2[i]), i});
        }
    }
    std::vector<bool> peeled(edges.size(), false);
    std::vector<Edge> chain_edges;
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<size_t> outdeg(mu, 0);
        for (size_t e = 0; e < edges.size(); ++e) {
            if (!peeled[e]) outdeg[edges[e].from]++;
        }
        for (size_t e = 0; e < edges.size(); ++e) {
            if (peeled[e] || outdeg[edges[e].to] != 0) continue;
            peeled[e] = true;
            chain_edges.push_back(edges[e]);
            changed = true;
        }
    }

    // The remaining closed edges must identify rows through the first
    // matrix: the permutation sigma(j1[i]) = j2[i] needs a well-defined
    // inverse on the j1 side.
    std::vector<int> src_of_col(mu, -1);
    n.closed_row.assign(mu, -1);
    for (const Edge& e : chain_edges) {
        n.open_edges.push_back({e.from, e.to, e.row});
    }
    for (size_t e = 0; e < edges.size(); ++e) {
        if (peeled[e]) continue;
        const size_t c = edges[e].from;
        if (src_of_col[c] >= 0) {
            std::ostringstream msg;
            msg << "normalize_gm: two closed rows both carry their P1 entry "
                   "in column "
                << c << "; no column assignment exists";
            throw std::runtime_error(msg.str());
        }
        src_of_col[c] = static_cast<int>(e);
        n.closed_row[c] = static_cast<int>(edges[e].row);
    }

    // Partial successor map on columns (closed edges only).
    constexpr size_t kUndef = static_cast<size_t>(-1);
    std::vector<size_t> succ(mu, kUndef);
    for (size_t e = 0; e < edges.size(); ++e) {
        if (!peeled[e]) succ[edges[e].from] = edges[e].to;
    }

    n.permutation.resize(mu);
    std::vector<size_t> indeg(mu, 0);
    for (size_t k = 0; k < mu; ++k) {
        n.permutation[k] = succ[k] == kUndef ? k : succ[k];
    }
    for (size_t k = 0; k < mu; ++k) indeg[n.permutation[k]]++;
    n.sigma_bijective = chain_edges.empty();
    for (size_t k = 0; k < mu; ++k) {
        if (indeg[k] != 1) n.sigma_bijective = false;
    }

    // Functional-graph classification: cyclic columns vs the rest.
    enum class Mark { Unseen, InProgress, Done };
    std::vector<Mark> mark(mu, Mark::Unseen);
    std::vector<bool> cyclic(mu, false);
    for (size_t start = 0; start < mu; ++start) {
        if (mark[start] != Mark::Unseen) continue;
        std::vector<size_t> path;
        size_t cur = start;
        while (cur != kUndef && mark[cur] == Mark::Unseen) {
            mark[cur] = Mark::InProgress;
            path.push_back(cur);
            cur = succ[cur];
        }
        if (cur != kUndef && mark[cur] == Mark::InProgress) {
            // Found a new cycle: everything from cur onwards in `path`.
            auto it = std::find(path.begin(), path.end(), cur);
            std::vector<size_t> cyc(it, path.end());
            // Rotate to the smallest column.
            auto mn = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), mn, cyc.end());
            for (size_t c : cyc) cyclic[c] = true;
            n.cycles.push_back(std::move(cyc));
        }
        for (size_t c : path) mark[c] = Mark::Done;
    }
    std::sort(n.cycles.begin(), n.cycles.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });

    // Chains: maximal paths of non-cyclic columns, each extended with the
    // cycle column it feeds into when it reaches one.
    std::vector<size_t> pred_count(mu, 0);
    for (size_t k = 0; k < mu; ++k) {
        if (!cyclic[k] && succ[k] != kUndef && !cyclic[succ[k]]) {
            pred_count[succ[k]]++;
        }
    }
    std::vector<bool> on_chain(mu, false);
    for (size_t start = 0; start < mu; ++start) {
        if (cyclic[start] || succ[start] == kUndef) continue;
        if (pred_count[start] != 0) continue;
        std::vector<size_t> chain;
        size_t cur = start;
        while (true) {
            chain.push_back(cur);
            if (cyclic[cur] || on_chain[cur]) break;
            on_chain[cur] = true;
            if (succ[cur] == kUndef) break;
            cur = succ[cur];
        }
        n.chains.push_back(std::move(chain));
    }

    // Peeled branches, assembled root-to-leaf: each path starts at the
    // column it hangs from (typically a cycle member) and walks outward
    // along the open recurrences.
    {
        std::vector<bool> is_target(mu, false);
        for (const Edge& e : chain_edges) is_target[e.to] = true;
        for (const Edge& root : chain_edges) {
            if (is_target[root.from]) continue;
            // Emit one path per leaf below this root.
            std::vector<std::vector<size_t>> stack{{root.from, root.to}};
            while (!stack.empty()) {
                std::vector<size_t> path = std::move(stack.back());
                stack.pop_back();
                bool extended = false;
                for (const Edge& e : chain_edges) {
                    if (e.from != path.back()) continue;
                    std::vector<size_t> next = path;
                    next.push_back(e.to);
                    stack.push_back(std::move(next));
                    extended = true;
                }
                if (!extended) n.chains.push_back(std::move(path));
            }
        }
    }

    for (const auto& cyc : n.cycles) {
        n.blocks.push_back(static_cast<long>(cyc.size()));
    }
    size_t n_cyclic = 0;
    for (size_t k = 0; k < mu; ++k) n_cyclic += cyclic[k] ? 1 : 0;
    for (size_t k = 0; k < mu - n_cyclic; ++k) n.blocks.push_back(1);
    long total = std::accumulate(n.blocks.begin(), n.blocks.end(), 0L);
    if (total != static_cast<long>(mu)) {
        throw std::logic_error("normalize_gm: block sizes do not sum to mu");
    }
    return n;
}

EulerReport verify_euler_identity(const NormalizedGM& ngm,
                                  const GMSystem& gm) {
    EulerReport rep;
    const size_t mu = ngm.mu;
    rep.residual1.assign(mu, Rat(0));
    rep.residual2.assign(mu, Rat(0));
    const long p1 = gm.spec.W.p(0);
    const long p2 = gm.spec.W.p(1);

    for (size_t i = 0; i < mu; ++i) {
        if (ngm.j1[i] >= 0) {
            const size_t j = static_cast<size_t>(ngm.j1[i]);
            const long bracket =
                gm.L_Phi[j] - ngm.L_Fprime[i] + p1 + ngm.eta_tilde[i] * p1;
            rep.residual1[i] = ngm.pvals1[i] * Rat(bracket);
            if (rep.residual1[i] != 0) {
                rep.all_zero = false;
                rep.failures.emplace_back(1, i, j);
            }
        }
        if (ngm.j2[i] >= 0) {
            const size_t j = static_cast<size_t>(ngm.j2[i]);
            const long bracket =
                gm.L_Phi[j] - ngm.L_Fprime[i] + p2 + ngm.delta_tilde[i] * p2;
            rep.residual2[i] = ngm.pvals2[i] * Rat(bracket);
            if (rep.residual2[i] != 0) {
                rep.all_zero = false;
                rep.failures.emplace_back(2, i, j);
            }
        }
    }
    if (!rep.failures.empty()) {
        const auto& [which, i, j] = rep.failures.front();
        std::ostringstream msg;
        msg << "weighted-homogeneity identity fails for matrix " << which
            << " at row " << i << ", column " << j << " (residual "
            << (which == 1 ? rep.residual1[i] : rep.residual2[i]).get_str()
            << ")";
        rep.detail = msg.str();
    }
    return rep;
}

std::pair<long, long> newton_d(const WeightSystem& W) {
    const long p1 = W.p(0);
    const long p2 = W.p(1);
    const long g = std::gcd(p1, p2);
    return {p2 / g, p1 / g};
}

std::optional<std::string> newton_delta_warning(const BivariatePoly& delta,
                                                long d1, long d2) {
    if (delta.is_zero()) return "discriminant is identically zero";
    const auto [a0, b0] = delta.monomial_content();
    long A = 0, B = 0;
    bool hit_s1_axis = false, hit_s2_axis = false;
    for (const auto& [e, c] : delta.terms()) {
        (void)c;
        const long a = e.first - a0;
        const long b = e.second - b0;
        A = std::max(A, a);
        B = std::max(B, b);
        if (b == 0 && a > 0) hit_s1_axis = true;
        if (a == 0 && b > 0) hit_s2_axis = true;
    }
    if (A == 0 && B == 0) {
        return "discriminant has no non-monomial factor to compare";
    }
    if (!hit_s1_axis || !hit_s2_axis) {
        return "non-monomial factor of the discriminant does not meet both "
               "axes";
    }
    if (A % d1 != 0 || B % d2 != 0 || A / d1 != B / d2) {
        std::ostringstream msg;
        msg << "non-monomial factor meets the axes at (" << A << ",0) and "
            << "(0," << B << "), which are not a common positive multiple "
            << "of (" << d1 << "," << d2 << ")";
        return msg.str();
    }
    return std::nullopt;
}

}  // namespace gms

#include "gms/poincare.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gms {

namespace {

// prod_j (1-t^{p_j}) / prod_i (1-t^{w_i}) as a truncated series.
SeriesQ quotient_factor(const WeightSystem& W, long N) {
    SeriesQ c = SeriesQ::one(N);
    for (int j = 0; j < W.k; ++j) {
        SeriesQ f = SeriesQ::one(N);
        f -= SeriesQ::power(W.p(j), N);
        c = c * f;
    }
    for (int i = 0; i < W.m; ++i) c.divide_by_one_minus_power(W.w(i));
    return c;
}

void check_truncation(long N, long required, const char* where) {
    if (N < required)
        throw std::invalid_argument(std::string(where) + ": truncation " +
                                    std::to_string(N) + " below required " +
                                    std::to_string(required));
}

}  // namespace

long poincare_min_truncation(const WeightSystem& W) {
    long top = W.top_weight();
    if (top < 0) top = 0;
    return 2 * top + W.p(0);
}

SeriesQ poincare_V(const WeightSystem& W, long N) {
    check_truncation(N, poincare_min_truncation(W), "poincare_V");
    const int R = W.m - W.k;  // order of the auxiliary-variable expansion

    // e[r]: coefficient of tau^r in prod_i (1 + tau t^{w_i})
    // (elementary symmetric polynomials of the t^{w_i}).
    std::vector<SeriesQ> e(static_cast<size_t>(R) + 1, SeriesQ(N));
    e[0] = SeriesQ::one(N);
    for (int i = 0; i < W.m; ++i) {
        for (int r = R; r >= 1; --r) {
            SeriesQ bump = e[static_cast<size_t>(r) - 1].shifted(W.w(i));
            e[static_cast<size_t>(r)] += bump;
        }
    }

    // d[r]: coefficient of tau^r in prod_j 1/(1 + tau t^{p_j}), i.e.
    // (-1)^r times the complete homogeneous polynomial of the t^{p_j}.
    std::vector<SeriesQ> d(static_cast<size_t>(R) + 1, SeriesQ(N));
    d[0] = SeriesQ::one(N);
    for (int j = 0; j < W.k; ++j) {
        std::vector<SeriesQ> next(static_cast<size_t>(R) + 1, SeriesQ(N));
        for (int r = 0; r <= R; ++r) {
            for (int s = 0; s <= r; ++s) {
                SeriesQ term = d[static_cast<size_t>(r - s)].shifted(
                    static_cast<long>(s) * W.p(j));
                if (s % 2 != 0)
                    next[static_cast<size_t>(r)] -= term;
                else
                    next[static_cast<size_t>(r)] += term;
            }
        }
        d = std::move(next);
    }

    const SeriesQ c = quotient_factor(W, N);

    // b[r]: coefficient of tau^r in the bracket (including the lone tau).
    std::vector<SeriesQ> b(static_cast<size_t>(R) + 1, SeriesQ(N));
    for (int r = 0; r <= R; ++r) {
        SeriesQ acc(N);
        for (int u = 0; u <= r; ++u)
            acc += e[static_cast<size_t>(u)] * d[static_cast<size_t>(r - u)];
        b[static_cast<size_t>(r)] = acc * c;
    }
    if (R >= 1) {
        SeriesQ one = SeriesQ::one(N);
        b[1] += one;
    }

    // Residue: coefficient of tau^R in bracket/(1+tau).
    SeriesQ result(N);
    for (int q = 0; q <= R; ++q) {
        if ((R - q) % 2 != 0)
            result -= b[static_cast<size_t>(q)];
        else
            result += b[static_cast<size_t>(q)];
    }

    // Independent closed form for the space-curve case.
    if (W.m == 3 && W.k == 2) {
        SeriesQ bracket(N);
        for (int i = 0; i < W.m; ++i) bracket += SeriesQ::power(W.w(i), N);
        for (int j = 0; j < W.k; ++j) bracket -= SeriesQ::power(W.p(j), N);
        bracket -= SeriesQ::one(N);
        SeriesQ closed = bracket * c + SeriesQ::one(N);
        if (!(closed == result))
            throw std::runtime_error(
                "poincare_V: residue expansion disagrees with closed form");
    }
    return result;
}

SeriesQ poincare_phi(const WeightSystem& W, long N) {
    const long D = W.top_weight();
    if (D <= 0)
        throw std::domain_error(
            "poincare_phi: degree sum must exceed weight sum");
    check_truncation(N, 2 * D, "poincare_phi");
    SeriesQ c = quotient_factor(W, N);
    SeriesQ result = SeriesQ::power(D, N);
    result += c;
    result -= c.shifted(D);
    return result;
}

long milnor_number(const WeightSystem& W) {
    const long N = poincare_min_truncation(W) + 1;
    const SeriesQ pv = poincare_V(W, N);
    const SeriesQ pphi = poincare_phi(W, N);

    // Both series must be polynomials with nonnegative integer
    // coefficients (they enumerate graded dimensions); the first one is
    // bounded by |p| + max p - |w|, the second by 2(|p| - |w|).
    const long dv = W.degree_sum() + W.p(0) - W.weight_sum();
    const long dphi = 2 * W.top_weight();
    for (long n = 0; n <= N; ++n) {
        const Rat& cv = pv.coeff(n);
        const Rat& cp = pphi.coeff(n);
        if (!rat_is_integer(cv) || cv < 0 || (n > dv && cv != 0))
            throw std::runtime_error(
                "milnor_number: graded dimensions of the primitive-form "
                "module are not those of an isolated singularity");
        if (!rat_is_integer(cp) || cp < 0 || (n > dphi && cp != 0))
            throw std::runtime_error(
                "milnor_number: graded dimensions of the local algebra "
                "are not those of an isolated singularity");
    }

    const Rat mu_phi = pphi.value_at_one();
    const Rat mu_v = pv.value_at_one();
    if (mu_phi != mu_v)
        throw std::runtime_error(
            "milnor_number: local-algebra and primitive-form counts "
            "disagree (" + rat_to_string(mu_phi) + " vs " +
            rat_to_string(mu_v) + ")");
    const long mu = rat_to_long(mu_phi);
    if (mu <= 0)
        throw std::runtime_error("milnor_number: count must be positive");
    return mu;
}

}  // namespace gms

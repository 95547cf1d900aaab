#include "gms/spectra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gms/poincare.hpp"

namespace gms {

SpectraReport spectra(const GradedBasis& phi, const WeightSystem& W) {
    SpectraReport sr;
    sr.p1 = W.p(0);
    sr.p2 = W.p(1);
    const long shift = W.weight_sum() - W.degree_sum();
    for (const auto& e : phi.elements) {
        sr.lambdas.push_back(rat(e.weight + shift, sr.p1));
        sr.alternate_sign_lambdas.push_back(rat(e.weight - shift, sr.p1));
    }
    std::sort(sr.lambdas.begin(), sr.lambdas.end());
    std::sort(sr.alternate_sign_lambdas.begin(),
              sr.alternate_sign_lambdas.end());
    if (!sr.lambdas.empty()) {
        sr.center = (sr.lambdas.front() + sr.lambdas.back()) / 2;
    }
    const Rat ratio = rat(sr.p1, sr.p2);
    for (const Rat& l : sr.lambdas) sr.lambdas2.push_back(l * ratio);
    return sr;
}

SymmetryCheck check_symmetry(const SpectraReport& sr) {
    SymmetryCheck res;
    const size_t mu = sr.lambdas.size();
    if (mu == 0) return res;
    res.pair_sum = sr.lambdas.front() + sr.lambdas.back();
    for (size_t i = 0; i < mu; ++i) {
        const size_t j = mu - 1 - i;
        if (sr.lambdas[i] + sr.lambdas[j] != res.pair_sum) {
            res.symmetric = false;
            res.failing_pair = {i, j};
            return res;
        }
    }
    return res;
}

HodgeReport hodge_numbers(const SpectraReport& sr, const WeightSystem& W) {
    HodgeReport h;
    for (const Rat& l : sr.lambdas) {
        if (l < 0) ++h.h01;
        if (l == 0) ++h.h11;
    }
    h.h10 = h.h01;
    h.genus_projective = h.h01;
    h.genus_series_coeff = genus_series(W).second;
    return h;
}

std::pair<SeriesQ, long> genus_series(const WeightSystem& W) {
    const long D = W.top_weight();
    if (D <= 0) {
        throw std::invalid_argument(
            "genus_series requires the degree sum to exceed the weight sum");
    }
    const long N = std::max(2 * D, D + 1);
    SeriesQ P = poincare_phi(W, N);

    long closed = 2 * rat_to_long(P.coeff(0)) - 1;
    for (long i = 1; i < D; ++i) closed += rat_to_long(P.coeff(i));

    P.set_coeff(D, P.coeff(D) - 1);
    P.divide_by_one_minus_power(1);
    P.divide_by_one_minus_power(D);
    const long genus = rat_to_long(P.coeff(D - 1));
    if (genus != closed) {
        std::ostringstream msg;
        msg << "genus_series: series coefficient " << genus
            << " disagrees with the closed count " << closed;
        throw std::logic_error(msg.str());
    }
    return {std::move(P), genus};
}

}  // namespace gms

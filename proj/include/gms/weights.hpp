/*
 * weights.hpp
 * -----------
 * Weight data for quasihomogeneous space-curve singularities: three
 * positive variable weights (w1,w2,w3) with gcd 1, and two defining
 * degrees (p1,p2) kept in descending order.  The ambient dimension m=3
 * and codimension k=2 are stored explicitly so the Poincaré-series
 * residue formula can be written for general (m,k).
 *
 * Monomials are exponent triples; the weighted degree of x^a is
 * sum(a_i * w_i).
 */
#pragma once

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gms {

using Monomial = std::array<int, 3>;

struct WeightSystem {
    int m = 3;                    // number of variables
    int k = 2;                    // number of defining equations
    std::vector<long> weights;    // w1..wm, positive, gcd 1
    std::vector<long> degrees;    // p1..pk, sorted descending

    long w(int i) const { return weights.at(static_cast<size_t>(i)); }
    long p(int j) const { return degrees.at(static_cast<size_t>(j)); }

    long weight_sum() const {
        long s = 0;
        for (long wi : weights) s += wi;
        return s;
    }
    long degree_sum() const {
        long s = 0;
        for (long pj : degrees) s += pj;
        return s;
    }
    // |p| - |w|, the symmetry center of the local-algebra weight list.
    long top_weight() const { return degree_sum() - weight_sum(); }
};

// Validating factory: positive weights, gcd(weights)=1, degrees sorted
// descending and positive.
inline WeightSystem make_weight_system(std::vector<long> weights, std::vector<long> degrees) {
    if (weights.size() != 3 || degrees.size() != 2)
        throw std::invalid_argument("weight system must have 3 weights and 2 degrees");
    long g = 0;
    for (long wi : weights) {
        if (wi <= 0) throw std::invalid_argument("weights must be positive");
        g = std::gcd(g, wi);
    }
    if (g != 1)
        throw std::invalid_argument("weights must have gcd 1 (got gcd " + std::to_string(g) + ")");
    for (long pj : degrees)
        if (pj <= 0) throw std::invalid_argument("degrees must be positive");
    if (degrees[0] < degrees[1])
        throw std::invalid_argument("degrees must be sorted descending (p1 >= p2)");
    WeightSystem W;
    W.weights = std::move(weights);
    W.degrees = std::move(degrees);
    return W;
}

inline long monomial_weight(const WeightSystem& W, const Monomial& mono) {
    long d = 0;
    for (int i = 0; i < 3; ++i) d += static_cast<long>(mono[static_cast<size_t>(i)]) * W.w(i);
    return d;
}

inline int monomial_degree(const Monomial& mono) { return mono[0] + mono[1] + mono[2]; }

// Canonical term order: total degree first, then the lexicographically
// larger exponent vector (x1 > x2 > x3) earlier.  Map iteration in this
// order matches the printed form of every polynomial in the project.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        return a > b;  // larger lex vector comes first
    }
};

}  // namespace gms

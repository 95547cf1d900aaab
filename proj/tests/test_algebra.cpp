// Unit tests for the exact-arithmetic foundation: weight systems,
// sparse polynomials, truncated series, and the Poincaré-series /
// Milnor-number layer.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gms/poincare.hpp"
#include "gms/poly.hpp"
#include "gms/series.hpp"
#include "gms/weights.hpp"

using namespace gms;

TEST_CASE("weight system validation") {
    auto W = make_weight_system({3, 2, 2}, {6, 4});
    CHECK(W.weight_sum() == 7);
    CHECK(W.degree_sum() == 10);
    CHECK(W.top_weight() == 3);

    CHECK_THROWS_AS(make_weight_system({2, 4, 2}, {6, 4}), std::invalid_argument);   // gcd 2
    CHECK_THROWS_AS(make_weight_system({3, 2, 2}, {4, 6}), std::invalid_argument);   // ascending
    CHECK_THROWS_AS(make_weight_system({3, -2, 2}, {6, 4}), std::invalid_argument);  // negative
    CHECK_THROWS_AS(make_weight_system({3, 2}, {6, 4}), std::invalid_argument);      // arity
}

TEST_CASE("monomial weight and canonical order") {
    auto W = make_weight_system({3, 2, 2}, {6, 4});
    CHECK(monomial_weight(W, {2, 0, 0}) == 6);
    CHECK(monomial_weight(W, {0, 1, 1}) == 4);

    MonoLess lt;
    // lower total degree first; within a degree, lexicographically
    // larger exponent vector first (x1 before x2 before x3).
    CHECK(lt({1, 0, 0}, {0, 2, 0}));
    CHECK(lt({2, 0, 0}, {1, 1, 0}));
    CHECK(lt({0, 1, 1}, {0, 0, 2}));
}

TEST_CASE("polynomial arithmetic and quasihomogeneity") {
    auto W = make_weight_system({3, 2, 2}, {6, 4});
    Poly f1 = Poly::parse("x1^2 + x2^3 + x3^3");
    Poly f2 = Poly::parse("x2 x3");

    CHECK(check_quasihomogeneous(W, f1, 6));
    CHECK(check_quasihomogeneous(W, f2, 4));
    CHECK_FALSE(check_quasihomogeneous(W, f1 + f2, 6));
    CHECK_FALSE((f1 + f2).quasihomogeneous_weight(W).has_value());

    Poly d = f1.derivative(0);
    CHECK(d == Poly::parse("2 * x1"));
    CHECK(f1.derivative(1) == Poly::parse("3 * x2^2"));

    Poly prod = f2 * f2;
    CHECK(prod == Poly::parse("x2^2 x3^2"));
    CHECK((f1 - f1).is_zero());
}

TEST_CASE("polynomial text round trip on representative forms") {
    for (const char* text : {
             "x1^2 + x2^3 + x3^3",
             "x2 x3",
             "x1 x2 + x3^3",
             "x1 x3 + x2^3 + x2 x3^2",
             "2 * x1 x3",
             "-1/2 * x1^2 x2 + 3 * x3",
         }) {
        Poly p = Poly::parse(text);
        CHECK(Poly::parse(p.to_string()) == p);
    }
    CHECK(Poly::parse("x1^2 + x2^3").to_string() == "x1^2 + x2^3");
    CHECK(Poly::parse("3/2 * x2 x3").to_string() == "3/2 * x2 x3");
    CHECK_THROWS_AS(Poly::parse("x1 +"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("x4^2"), std::invalid_argument);
}

TEST_CASE("series arithmetic, truncation discipline, unit division") {
    SeriesQ a = SeriesQ::one(10);
    a.divide_by_one_minus_power(2);  // 1/(1-t^2)
    for (long n = 0; n <= 10; ++n) CHECK(a.coeff(n) == (n % 2 == 0 ? 1 : 0));

    SeriesQ b = SeriesQ::power(3, 6);
    SeriesQ c = a * b;  // truncation drops to 6
    CHECK(c.truncation() == 6);
    CHECK(c.coeff(3) == 1);
    CHECK(c.coeff(5) == 1);
    CHECK(c.coeff(4) == 0);

    SeriesQ d = SeriesQ::one(5) - SeriesQ::power(1, 5);
    d.divide_by_one_minus_power(1);
    CHECK(d == SeriesQ::one(5));

    CHECK_THROWS_AS(SeriesQ(-1), std::invalid_argument);
}

// Local-algebra Poincaré polynomial: symmetric about the top weight
// D = |p| - |w|, value mu at t=1, and the degree bound from the
// residue formula.  Weight data below are the standard space-curve
// families used throughout the test suite.
static void check_poincare_profile(std::vector<long> w, std::vector<long> p, long mu_expected) {
    auto W = make_weight_system(std::move(w), std::move(p));
    long N = poincare_min_truncation(W);
    SeriesQ pv = poincare_V(W, N);
    SeriesQ pphi = poincare_phi(W, N);
    long D = W.top_weight();

    CHECK(pphi.value_at_one() == mu_expected);
    CHECK(pv.value_at_one() == mu_expected);
    CHECK(milnor_number(W) == mu_expected);

    CHECK(pphi.degree() == 2 * D);
    for (long n = 0; n <= 2 * D; ++n) CHECK(pphi.coeff(n) == pphi.coeff(2 * D - n));
    CHECK(pv.degree() <= W.degree_sum() + W.p(0) - W.weight_sum());
}

TEST_CASE("Poincaré profiles of the standard families") {
    check_poincare_profile({1, 1, 1}, {2, 2}, 5);      // two quadrics, S-type m=1
    check_poincare_profile({3, 3, 2}, {6, 5}, 6);      // S-type m=1, even member
    check_poincare_profile({3, 2, 2}, {6, 4}, 7);      // T-type, (2,3,3)
    check_poincare_profile({6, 4, 3}, {12, 7}, 8);     // T-type, (2,3,4)
    check_poincare_profile({15, 10, 6}, {30, 16}, 9);  // T-type, (2,3,5)
    check_poincare_profile({4, 5, 3}, {9, 8}, 7);      // U-type
    check_poincare_profile({3, 3, 2}, {6, 6}, 9);      // Z-type
    check_poincare_profile({7, 6, 4}, {14, 12}, 10);   // Z-type
    check_poincare_profile({2, 1, 1}, {3, 3}, 10);     // twisted quartic pair
    check_poincare_profile({7, 3, 5}, {14, 10}, 13);   // K-type
    check_poincare_profile({9, 6, 5}, {18, 15}, 14);   // HD-type
}

TEST_CASE("explicit Poincaré coefficients for the (2,3,3) curve") {
    auto W = make_weight_system({3, 2, 2}, {6, 4});
    SeriesQ pphi = poincare_phi(W, poincare_min_truncation(W));
    // weight multiset {0,2,2,3,4,4,6}
    std::vector<long> expect = {1, 0, 2, 1, 2, 0, 1};
    for (long n = 0; n < static_cast<long>(expect.size()); ++n)
        CHECK(pphi.coeff(n) == expect[static_cast<size_t>(n)]);
    CHECK(pphi.degree() == 6);
}

TEST_CASE("poincare_phi requires positive top weight") {
    // |p| <= |w|: not in the class the formula covers.
    auto W = make_weight_system({3, 2, 2}, {4, 3});
    CHECK_THROWS_AS(poincare_phi(W, poincare_min_truncation(W)), std::domain_error);
}

TEST_CASE("poincare_V reports the required truncation order") {
    auto W = make_weight_system({3, 2, 2}, {6, 4});
    long need = poincare_min_truncation(W);
    CHECK_THROWS_WITH_AS(poincare_V(W, need - 1),
                         doctest::Contains(std::to_string(need).c_str()),
                         std::invalid_argument);
}

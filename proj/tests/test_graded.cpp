// Unit tests for the graded-quotient layer: monomial enumeration,
// Jacobian minors, the Phi and F bases, and differential-form algebra.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixture_curves.hpp"
#include "gms/graded.hpp"
#include "gms/poincare.hpp"

using namespace gms;

static SingularitySpec spec_of(const CurveFixture& fx) {
    return make_singularity_spec(make_weight_system(fx.weights, fx.degrees),
                                 Poly::parse(fx.f1), Poly::parse(fx.f2), fx.name);
}

static std::vector<long> weight_multiset(const GradedBasis& B) {
    std::vector<long> w;
    for (const auto& e : B.elements) w.push_back(e.weight);
    std::sort(w.begin(), w.end());
    return w;
}

TEST_CASE("monomial enumeration in canonical order") {
    auto W = make_weight_system({3, 2, 2}, {6, 4});
    CHECK(enumerate_monomials(W, 0) == std::vector<Monomial>{{0, 0, 0}});
    CHECK(enumerate_monomials(W, 1).empty());
    CHECK(enumerate_monomials(W, -3).empty());
    CHECK(enumerate_monomials(W, 4) ==
          std::vector<Monomial>{{0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
    CHECK(enumerate_monomials(W, 6) ==
          std::vector<Monomial>{{2, 0, 0}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}});
}

TEST_CASE("spec factory validates quasihomogeneity") {
    auto W = make_weight_system({3, 2, 2}, {6, 4});
    CHECK_THROWS_AS(
        make_singularity_spec(W, Poly::parse("x1^2 + x2^2"), Poly::parse("x2 x3")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        make_singularity_spec(W, Poly::parse("x1^2 + x2^3 + x3^3"), Poly::parse("x1 x3")),
        std::invalid_argument);  // weight 5, not p2 = 4
}

TEST_CASE("Jacobian minors of the (2,3,3) curve") {
    auto fx = curve_fixtures()[3];  // T7
    REQUIRE(fx.name == "T7");
    auto S = spec_of(fx);
    auto minors = jacobian_minors(S);
    CHECK(minors[0] == Poly::parse("2 * x1 x3"));
    CHECK(minors[1] == Poly::parse("2 * x1 x2"));
    CHECK(minors[2] == Poly::parse("3 * x2^3 - 3 * x3^3"));
    CHECK(check_quasihomogeneous(S.W, minors[0], 5));
    CHECK(check_quasihomogeneous(S.W, minors[1], 5));
    CHECK(check_quasihomogeneous(S.W, minors[2], 6));
}

TEST_CASE("Phi basis of the (2,3,3) curve matches the printed representatives") {
    auto S = spec_of(curve_fixtures()[3]);
    GradedBasis B = basis_phi(S);
    REQUIRE(B.size() == 7);
    std::vector<std::string> got;
    for (size_t i = 0; i < B.size(); ++i) got.push_back(B.repr_text(i));
    std::sort(got.begin(), got.end());
    std::vector<std::string> expect = {"1", "x2", "x2^2", "x3", "x3^2", "x3^3", "x1"};
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
}

TEST_CASE("graded bases reproduce the frozen weight multisets") {
    for (const auto& fx : curve_fixtures()) {
        CAPTURE(fx.name);
        auto S = spec_of(fx);
        GradedBasis phi = basis_phi(S);
        GradedBasis F = basis_F(S);
        CHECK(weight_multiset(phi) == fx.phi_weights);
        CHECK(weight_multiset(F) == fx.f_weights);
        CHECK(phi.size() == F.size());
        CHECK(static_cast<long>(phi.size()) == milnor_number(S.W));

        // Symmetry of the local-algebra weights about |p| - |w|.
        long D = S.W.top_weight();
        auto w = weight_multiset(phi);
        for (size_t i = 0; i < w.size(); ++i)
            CHECK(w[i] + w[w.size() - 1 - i] == 2 * D);
    }
}

TEST_CASE("basis elements reduce to themselves") {
    auto S = spec_of(curve_fixtures()[3]);
    GradedBasis phi = basis_phi(S);
    // Representatives are by construction outside the ideal slice; the
    // weight-0 piece is always {1}.
    CHECK(phi.repr_text(0) == "1");
    CHECK(phi.weight(0) == 0);
}

TEST_CASE("differential form algebra") {
    auto W = make_weight_system({3, 2, 2}, {6, 4});
    Poly f1 = Poly::parse("x1^2 + x2^3 + x3^3");
    Poly f2 = Poly::parse("x2 x3");

    DiffForm df1 = exterior_derivative(f1);
    CHECK(df1.comp(0) == Poly::parse("2 * x1"));
    CHECK(df1.comp(1) == Poly::parse("3 * x2^2"));
    CHECK(df1.comp(2) == Poly::parse("3 * x3^2"));

    // d f ^ d f = 0 and antisymmetry.
    CHECK(wedge(df1, df1).is_zero());
    DiffForm df2 = exterior_derivative(f2);
    CHECK((wedge(df1, df2) + wedge(df2, df1)).is_zero());

    // Weight of a form = coefficient weight + differential weights.
    CHECK(form_weight(W, df1) == 6);
    CHECK(form_weight(W, wedge(df1, df2)) == 10);

    // Contraction of the Euler field.
    DiffForm vol = DiffForm::basis_form(3, 0);
    DiffForm ie = euler_contraction(W, vol);
    CHECK(ie.comp(0) == Poly::parse("3 * x1"));
    CHECK(ie.comp(1) == Poly::parse("2 * x2"));
    CHECK(ie.comp(2) == Poly::parse("2 * x3"));
    CHECK(form_weight(W, ie) == 7);

    // i_E then wedge with both differentials dies in the quotient's
    // defining submodule: check the classical identity
    // df ^ i_E(vol) = w-degree(f) * f * vol  for quasihomogeneous f.
    DiffForm lhs = wedge(df1, ie);
    CHECK(lhs.comp(0) == Rat(6) * f1);

    CHECK(DiffForm::basis_form(2, 2, Poly::parse("x3")).to_string() == "x3 dx1 dx2");
    CHECK(DiffForm::basis_form(2, 0, Poly::parse("3 * x1")).to_string() ==
          "3 * x1 dx2 dx3");
}

TEST_CASE("jacobian bracket") {
    auto S = spec_of(curve_fixtures()[3]);  // T7
    CHECK(jacobian_bracket(S, S.f1).is_zero());
    CHECK(jacobian_bracket(S, Poly(Rat(5))).is_zero());
    Poly b = jacobian_bracket(S, Poly::variable(2));
    CHECK(b == Poly::parse("2 * x1 x3"));
    // Quasihomogeneous of weight |p| - |w| + w(g).
    CHECK(check_quasihomogeneous(S.W, b, 10 - 7 + 2));
}

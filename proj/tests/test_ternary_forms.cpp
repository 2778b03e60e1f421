#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sextic/fixtures.hpp"
#include "sextic/ternary.hpp"

#include <random>

using namespace sextic;

namespace {

TernaryForm random_form(std::mt19937_64& rng, int degree, int nterms) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    TernaryForm f(degree);
    for (int t = 0; t < nterms; ++t) {
        int i = (int)(rng() % (unsigned)(degree + 1));
        int j = (int)(rng() % (unsigned)(degree - i + 1));
        f.add_term(i, j, degree - i - j, Rational(coeff(rng)));
    }
    return f;
}

TernaryForm euler_combination(const TernaryForm& f) {
    auto p = partials(f);
    TernaryForm s = TernaryForm::variable(0) * p[0] + TernaryForm::variable(1) * p[1] +
                    TernaryForm::variable(2) * p[2];
    return s - f.scaled(Rational(f.degree()));
}

}  // namespace

TEST_CASE("partials of monomials and fixture cubics") {
    TernaryForm m = TernaryForm::monomial(3, 0, 0, Rational(1));
    auto p = partials(m);
    CHECK(p[0] == TernaryForm::monomial(2, 0, 0, Rational(3)));
    CHECK(p[1].is_zero());
    CHECK(p[2].is_zero());

    auto pf = partials(fixtures::f54());  // x^3 - x z^2
    TernaryForm want0(2), want2(2);
    want0.add_term(2, 0, 0, Rational(3));
    want0.add_term(0, 0, 2, Rational(-1));
    want2.add_term(1, 0, 1, Rational(-2));
    CHECK(pf[0] == want0);
    CHECK(pf[1].is_zero());
    CHECK(pf[2] == want2);
}

TEST_CASE("Euler identity on random forms") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 200; ++it) {
        int d = 1 + (int)(rng() % 9);
        TernaryForm f = random_form(rng, d, 6);
        if (f.is_zero()) continue;
        CHECK(euler_combination(f).is_zero());
    }
}

TEST_CASE("jacobian determinant basics") {
    TernaryForm f = fixtures::f54(), g = fixtures::robinson();
    CHECK(jacobian_det(f, f, g).is_zero());
    TernaryForm j = jacobian_det(TernaryForm::variable(0), TernaryForm::variable(1),
                                 TernaryForm::variable(2));
    CHECK(j.degree() == 0);
    CHECK(j.coeff(0, 0, 0) == Rational(1));
}

TEST_CASE("jacobian of the eight-point pencil matches the displayed nonic") {
    TernaryForm j = jacobian_det(fixtures::f54(), fixtures::f54_prime(), fixtures::robinson());
    CHECK(j.degree() == 9);
    CHECK(proportional(j, fixtures::nonic54()));
}

TEST_CASE("jacobian is alternating") {
    std::mt19937_64 rng(991);
    TernaryForm a = random_form(rng, 2, 4), b = random_form(rng, 3, 5), c = random_form(rng, 2, 4);
    TernaryForm j1 = jacobian_det(a, b, c);
    TernaryForm j2 = jacobian_det(b, a, c);
    CHECK(j1 == -j2);
    TernaryForm j3 = jacobian_det(a, c, b);
    CHECK(j1 == -j3);
}

TEST_CASE("evaluation at fixture points") {
    TernaryForm r = fixtures::robinson();
    CHECK(evaluate_sign(r, ProjectivePoint(Rational(1), Rational(1), Rational(1))) == 0);
    CHECK(evaluate_sign(r, ProjectivePoint(Rational(2), Rational(1), Rational(1))) > 0);
    for (auto& p : fixtures::robinson_points()) CHECK(vanishes_at(r, p));
}

TEST_CASE("projective scaling of evaluation") {
    std::mt19937_64 rng(8);
    TernaryForm f = random_form(rng, 4, 6);
    Rational lam(7, 3);
    ProjectivePoint p(Rational(2), Rational(-5), Rational(3));
    // normalized representatives make scaled points equal
    ProjectivePoint q(Rational(2) * lam, Rational(-5) * lam, Rational(3) * lam);
    CHECK(p == q);
    CHECK(evaluate_sign(f, p) == evaluate_sign(f, q));
}

TEST_CASE("apply_projectivity") {
    std::mt19937_64 rng(55);
    TernaryForm f = random_form(rng, 5, 7);
    CHECK(apply_projectivity(f, Mat3::identity()) == f);

    Mat3 swap = Mat3::identity();
    std::swap(swap.m[0][0], swap.m[0][1]);
    std::swap(swap.m[1][1], swap.m[1][0]);
    CHECK(apply_projectivity(apply_projectivity(f, swap), swap) == f);

    // x -> x + y on x^2
    Mat3 t = Mat3::identity();
    t.m[0][1] = Rational(1);
    TernaryForm x2 = TernaryForm::monomial(2, 0, 0, Rational(1));
    TernaryForm got = apply_projectivity(x2, t);
    TernaryForm want(2);
    want.add_term(2, 0, 0, Rational(1));
    want.add_term(1, 1, 0, Rational(2));
    want.add_term(0, 2, 0, Rational(1));
    CHECK(got == want);

    Mat3 sing = Mat3::identity();
    sing.m[2][2] = Rational(0);
    CHECK_THROWS_AS(apply_projectivity(f, sing), invalid_input);
}

TEST_CASE("projectivity composition law and chain rule") {
    std::mt19937_64 rng(6161);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int it = 0; it < 10; ++it) {
        Mat3 T, U;
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) T.m[i][j] = Rational(entry(rng));
        } while (T.det().is_zero());
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) U.m[i][j] = Rational(entry(rng));
        } while (U.det().is_zero());
        TernaryForm f = random_form(rng, 3, 5);
        CHECK(apply_projectivity(apply_projectivity(f, U), T) ==
              apply_projectivity(f, U.mul(T)));
        // chain rule: d(f.T)_v = sum_w (d_w f).T * T[w][v]
        auto lhs = partials(apply_projectivity(f, T));
        auto pf = partials(f);
        for (int v = 0; v < 3; ++v) {
            TernaryForm rhs(std::max(f.degree() - 1, 0));
            for (int w = 0; w < 3; ++w)
                rhs = rhs + apply_projectivity(pf[(size_t)w], T).scaled(T.m[w][v]);
            CHECK(lhs[(size_t)v] == rhs);
        }
    }
}

TEST_CASE("form gcd") {
    TernaryForm x0x1 = TernaryForm::monomial(1, 1, 0, Rational(1));
    TernaryForm x0x2 = TernaryForm::monomial(1, 0, 1, Rational(1));
    CHECK(form_gcd(x0x1, x0x2) == TernaryForm::variable(0));

    TernaryForm f = fixtures::f53();
    CHECK(proportional(form_gcd(f, f), canonical_normalize(f)));

    // coprime pair from the symmetric family at u = 3
    TernaryForm fu = fixtures::f55(Rational(3));
    TernaryForm qu = fixtures::q55(Rational(3));
    TernaryForm g = form_gcd(fu * fu, qu);
    CHECK(g.degree() == 0);
}

TEST_CASE("form exact division round-trips") {
    TernaryForm a = fixtures::q52();
    TernaryForm l = TernaryForm::linear(Rational(1), Rational(2), Rational(-3));
    CHECK(form_divides(l, a));
    TernaryForm q = form_divexact(a, l);
    CHECK(q * l == a);
    CHECK(!form_divides(TernaryForm::linear(Rational(1), Rational(1), Rational(0)), a));
}

TEST_CASE("parser and printer") {
    TernaryForm f = TernaryForm::parse("x0^3 - x0 x2^2");
    CHECK(f == fixtures::f54());
    TernaryForm g = TernaryForm::parse("3/2 x0^2 x1 + x2^3 - x1^3");
    CHECK(g.coeff(2, 1, 0) == rat(3, 2));
    CHECK_THROWS_AS(TernaryForm::parse("x0^2 + x1"), invalid_input);  // inhomogeneous
    TernaryForm h = TernaryForm::parse(f.str());
    CHECK(h == f);
}

TEST_CASE("dehomogenize and line restriction") {
    TernaryForm r = fixtures::robinson();
    BiPoly b = dehomogenize(r, 2);
    // value at (2, 1): robinson(2,1,1)
    Rational v(0);
    for (int j = 0; j <= b.deg(); ++j) v += b.coeff(j).eval(Rational(2)) * Rational(1);
    // evaluate by Horner instead
    Rational acc(0);
    for (int j = b.deg(); j >= 0; --j) acc = acc * Rational(1) + b.coeff(j).eval(Rational(2));
    CHECK(acc == r.evaluate(Rational(2), Rational(1), Rational(1)));

    QPoly lr = line_restriction(r, 2);  // z = 0: x^6 - x^4 y^2 - x^2 y^4 + y^6 at (t:1)
    CHECK(lr.eval(Rational(1)) == Rational(0));  // (1:1:0) is a zero
    CHECK(lr.eval(Rational(2)) == r.evaluate(Rational(2), Rational(1), Rational(0)));
}

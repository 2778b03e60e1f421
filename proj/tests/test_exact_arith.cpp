#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sextic/ran.hpp"

#include <random>

using namespace sextic;

TEST_CASE("rational parsing and normalization") {
    CHECK(Rational::parse("3/6") == rat(1, 2));
    CHECK(Rational::parse("-4/2") == rat(-2));
    CHECK(Rational::parse("-1.25") == rat(-5, 4));
    CHECK(rat(2, -4) == rat(-1, 2));
    CHECK(rat(1, 2).str() == "1/2");
    CHECK(rat(-7).str() == "-7");
    CHECK_THROWS_AS(rat(1, 0), invalid_input);
}

TEST_CASE("root isolation: cubic with a single real root") {
    QPoly p = qpoly_from({-12, -24, -15, 5});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 1);
    Ran a = Ran::from_isolated(roots[0]);
    CHECK(ran_compare_rat(a, rat(42, 10)) > 0);
    CHECK(ran_compare_rat(a, rat(43, 10)) < 0);
}

TEST_CASE("root isolation: exact rational roots") {
    QPoly p = qpoly_from({-1, 0, 1});  // x^2 - 1
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].is_rational());
    CHECK(roots[1].is_rational());
    CHECK(roots[0].lo == rat(-1));
    CHECK(roots[1].lo == rat(1));
}

TEST_CASE("root isolation: three real roots, smallest bracketed") {
    QPoly p = qpoly_from({15, -59, -111, 27});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    Ran a = Ran::from_isolated(roots[0]);
    CHECK(ran_compare_rat(a, rat(-65, 100)) > 0);
    CHECK(ran_compare_rat(a, rat(-64, 100)) < 0);
}

TEST_CASE("sign_at") {
    QPoly def = qpoly_from({-12, -24, -15, 5});
    Ran a = Ran::from_isolated(isolate_real_roots(def)[0]);
    CHECK(sign_at(qpoly_from({-4, 1}), a) == 1);   // x - 4 > 0 at ~4.26
    CHECK(sign_at(def, a) == 0);                   // defining vanishes
    CHECK(sign_at(qpoly_from({1, 0, 1}), a) == 1); // x^2 + 1 > 0
}

TEST_CASE("sign_at stable under refinement") {
    QPoly def = qpoly_from({-2, 0, 1});  // sqrt(2)
    auto roots = isolate_real_roots(def);
    REQUIRE(roots.size() == 2);
    Ran a = Ran::from_isolated(roots[1]);
    QPoly p = qpoly_from({-1, 1});  // x - 1
    int s = sign_at(p, a);
    for (int i = 0; i < 50; ++i) a.refine();
    CHECK(sign_at(p, a) == s);
    CHECK(s == 1);
}

TEST_CASE("resultants: hand-checked values") {
    QPoly p = qpoly_from({-2, 0, 1});
    QPoly q = qpoly_from({-3, 0, 1});
    CHECK(poly_resultant(p, q) == rat(1));
    QPoly r = qpoly_from({1, 2, 3, 4});
    CHECK(poly_resultant(r, r) == rat(0));
    // res(x - c, q) = q(c)
    Rational c = rat(7, 3);
    QPoly lin = qpoly_from_rationals({-c, rat(1)});
    QPoly g = qpoly_from({5, -1, 0, 2});
    CHECK(poly_resultant(lin, g) == g.eval(c));
}

TEST_CASE("resultant swap sign rule on random pairs") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> coeff(-9, 9), degd(1, 5);
    for (int iter = 0; iter < 100; ++iter) {
        QPoly p, q;
        do {
            p = QPoly();
            int d = degd(rng);
            for (int i = 0; i <= d; ++i) p.set_coeff(i, rat(coeff(rng)));
        } while (p.deg() < 1);
        do {
            q = QPoly();
            int d = degd(rng);
            for (int i = 0; i <= d; ++i) q.set_coeff(i, rat(coeff(rng)));
        } while (q.deg() < 1);
        Rational rpq = poly_resultant(p, q);
        Rational rqp = poly_resultant(q, p);
        if ((p.deg() & 1) && (q.deg() & 1))
            CHECK(rpq == -rqp);
        else
            CHECK(rpq == rqp);
    }
}

TEST_CASE("isolation count matches Sturm count on random polynomials") {
    std::mt19937_64 rng(98765);
    std::uniform_int_distribution<int> coeff(-50, 50), degd(1, 12);
    for (int iter = 0; iter < 60; ++iter) {
        QPoly p;
        int d = degd(rng);
        for (int i = 0; i <= d; ++i) p.set_coeff(i, rat(coeff(rng)));
        if (p.is_zero() || p.deg() < 1) continue;
        SturmChain chain(p);
        int expected = chain.count_all_roots();
        auto roots = isolate_real_roots(p);
        CHECK((int)roots.size() == expected);
        // intervals pairwise disjoint and sorted
        for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi <= roots[i].lo);
    }
}

TEST_CASE("ran arithmetic agrees with interval midpoints") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coeff(-20, 20), degd(2, 4);
    std::vector<Ran> pool;
    while (pool.size() < 8) {
        QPoly p;
        int d = degd(rng);
        for (int i = 0; i <= d; ++i) p.set_coeff(i, rat(coeff(rng)));
        if (p.deg() < 1) continue;
        for (auto& ir : isolate_real_roots(p)) {
            pool.push_back(Ran::from_isolated(ir));
            if (pool.size() >= 8) break;
        }
    }
    Rational w = rat(1, 1l << 40);
    for (size_t i = 0; i + 1 < pool.size(); i += 2) {
        const Ran& x = pool[i];
        const Ran& y = pool[i + 1];
        Ran s = ran_add(x, y);
        Ran m = ran_mul(x, y);
        x.refine_below(w);
        y.refine_below(w);
        s.refine_below(w);
        m.refine_below(w);
        // midpoint consistency at width 2^-40
        Rational xs = x.lo() + y.lo(), xh = x.hi() + y.hi();
        CHECK(s.hi() >= xs);
        CHECK(s.lo() <= xh);
        QInterval prod = iv_mul(x.box(), y.box());
        CHECK(m.hi() >= prod.lo);
        CHECK(m.lo() <= prod.hi);
        // ordering total and consistent
        int c = ran_compare(x, y);
        if (c < 0) CHECK(x.lo() <= y.hi());
        if (c > 0) CHECK(y.lo() <= x.hi());
        if (c == 0) CHECK(ran_compare(y, x) == 0);
    }
}

TEST_CASE("ran negation and equality via gcd") {
    QPoly p = qpoly_from({-2, 0, 1});
    auto roots = isolate_real_roots(p);
    Ran sqrt2 = Ran::from_isolated(roots[1]);
    Ran msqrt2 = Ran::from_isolated(roots[0]);
    CHECK(ran_eq(ran_neg(sqrt2), msqrt2));
    CHECK(ran_compare(sqrt2, msqrt2) > 0);
    Ran sum = ran_add(sqrt2, msqrt2);
    CHECK(sum.sign() == 0);
    CHECK(sum.is_rational());
}

TEST_CASE("ran of polynomial and rational function") {
    QPoly p = qpoly_from({-2, 0, 1});
    Ran s2 = Ran::from_isolated(isolate_real_roots(p)[1]);
    // s2^2 = 2
    Ran sq = ran_of_polynomial(s2, qpoly_from({0, 0, 1}));
    CHECK(sq.is_rational());
    CHECK(sq.rational_value() == rat(2));
    // (s2 + 1)/(s2 - 1) = 3 + 2*sqrt(2)
    Ran v = ran_of_rational_function(s2, qpoly_from({1, 1}), qpoly_from({-1, 1}));
    Ran expect = ran_of_polynomial(s2, qpoly_from({3, 2}));
    CHECK(ran_eq(v, expect));
}

TEST_CASE("decimal rendering carries certified precision") {
    QPoly p = qpoly_from({-2, 0, 1});
    Ran s2 = Ran::from_isolated(isolate_real_roots(p)[1]);
    CHECK(s2.decimal(5) == "1.41421");
    CHECK(Ran::of_rational(rat(-1, 8)).decimal(3) == "-0.125");
}

TEST_CASE("zero polynomial inputs are rejected") {
    CHECK_THROWS_AS(isolate_real_roots(QPoly()), invalid_input);
}

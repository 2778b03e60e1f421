#include "sextic/fixtures.hpp"

namespace sextic::fixtures {

namespace {

ProjectivePoint pt(long a, long b, long c) {
    return ProjectivePoint(Rational(a), Rational(b), Rational(c));
}

TernaryForm sym_sum_pow(int ei, int ej) {
    // sum over ordered pairs (i, j), i != j of x_i^ei x_j^ej
    TernaryForm f(ei + ej);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int e[3] = {0, 0, 0};
            e[i] += ei;
            e[j] += ej;
            f.add_term(e[0], e[1], e[2], Rational(1));
        }
    return f;
}

TernaryForm sym_pair_pow(int ei, int ej) {
    // sum over unordered pairs {i, j} of x_i^ei x_j^ej (ei == ej)
    TernaryForm f(ei + ej);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int e[3] = {0, 0, 0};
            e[i] += ei;
            e[j] += ej;
            f.add_term(e[0], e[1], e[2], Rational(1));
        }
    return f;
}

TernaryForm sym_top(int ei) {
    // sum over i of x_i^ei x_j x_k with {j,k} the other two
    TernaryForm f(ei + 2);
    for (int i = 0; i < 3; ++i) {
        int e[3] = {1, 1, 1};
        e[i] = ei;
        f.add_term(e[0], e[1], e[2], Rational(1));
    }
    return f;
}

TernaryForm sym_mixed() {
    // sum over ordered (i, j), i != j, of x_i^3 x_j^2 x_k
    TernaryForm f(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int k = 3 - i - j;
            int e[3] = {0, 0, 0};
            e[i] = 3;
            e[j] = 2;
            e[k] = 1;
            f.add_term(e[0], e[1], e[2], Rational(1));
        }
    return f;
}

}  // namespace

std::vector<ProjectivePoint> s51() {
    return {pt(-2, 0, 1), pt(0, 2, 1),  pt(0, -2, 1),  pt(-1, -2, 1), pt(-1, 2, 1),
            pt(2, -4, 1), pt(2, 4, 1),  pt(6, 16, 1),  pt(6, -16, 1)};
}

TernaryForm f51() {
    // y^2 z - x^3 - x^2 z - 4 z^3
    TernaryForm f(3);
    f.add_term(0, 2, 1, Rational(1));
    f.add_term(3, 0, 0, Rational(-1));
    f.add_term(2, 0, 1, Rational(-1));
    f.add_term(0, 0, 3, Rational(-4));
    return f;
}

TernaryForm q51() {
    TernaryForm l1 = TernaryForm::linear(Rational(3), Rational(1), Rational(-2));
    TernaryForm l2 = TernaryForm::linear(Rational(3), Rational(-1), Rational(-2));
    TernaryForm l3 = TernaryForm::linear(Rational(2), Rational(1), Rational(4));
    TernaryForm l4 = TernaryForm::linear(Rational(2), Rational(-1), Rational(4));
    TernaryForm p(2);  // y^2 - 2x^2 - 2xz - 4z^2
    p.add_term(0, 2, 0, Rational(1));
    p.add_term(2, 0, 0, Rational(-2));
    p.add_term(1, 0, 1, Rational(-2));
    p.add_term(0, 0, 2, Rational(-4));
    return l1 * l2 * l3 * l4 * p;
}

std::vector<ProjectivePoint> s52() {
    std::vector<ProjectivePoint> s = {pt(0, 1, 1), pt(0, -1, 1), pt(1, 0, 1),
                                      pt(1, 0, -1), pt(1, 1, 0), pt(-1, 1, 0)};
    s.push_back(ProjectivePoint(Rational(0), rat(3, 2), Rational(1)));
    s.push_back(ProjectivePoint(Rational(1), Rational(0), rat(1, 3)));
    s.push_back(pt(-2, 1, 0));
    return s;
}

TernaryForm f52() { return TernaryForm::monomial(1, 1, 1, Rational(1)); }

TernaryForm q52() {
    TernaryForm a = TernaryForm::linear(Rational(1), Rational(1), Rational(1));
    TernaryForm b = TernaryForm::linear(Rational(1), Rational(1), Rational(-1));
    TernaryForm c = TernaryForm::linear(Rational(1), Rational(-1), Rational(1));
    TernaryForm d = TernaryForm::linear(Rational(1), Rational(-1), Rational(-1));
    TernaryForm e = TernaryForm::linear(Rational(1), Rational(2), Rational(-3));
    return a * b * c * d * e * e;
}

std::vector<ProjectivePoint> s53() {
    return {pt(0, 1, 1), pt(0, 1, -1), pt(1, 0, 1), pt(1, 0, -1), pt(1, 1, 0),
            pt(1, -1, 0), pt(3, 0, 2), pt(3, 2, 0), pt(5, 4, 4)};
}

TernaryForm f53() {
    TernaryForm s = TernaryForm::linear(Rational(1), Rational(1), Rational(1));
    TernaryForm q(2);  // 2x^2+3y^2+3z^2-5xy-5xz-6yz
    q.add_term(2, 0, 0, Rational(2));
    q.add_term(0, 2, 0, Rational(3));
    q.add_term(0, 0, 2, Rational(3));
    q.add_term(1, 1, 0, Rational(-5));
    q.add_term(1, 0, 1, Rational(-5));
    q.add_term(0, 1, 1, Rational(-6));
    TernaryForm xyz = TernaryForm::monomial(1, 1, 1, Rational(1));
    return (s * q).scaled(Rational(8)) + xyz.scaled(Rational(195));
}

TernaryForm q53_extreme() {
    TernaryForm l1 = TernaryForm::linear(Rational(1), Rational(1), Rational(1));
    TernaryForm l2 = TernaryForm::linear(Rational(1), Rational(1), Rational(-1));
    TernaryForm l3 = TernaryForm::linear(Rational(1), Rational(-1), Rational(1));
    TernaryForm l4 = TernaryForm::linear(Rational(1), Rational(-1), Rational(-1));
    TernaryForm l = TernaryForm::linear(Rational(2), Rational(-3), Rational(-3));
    TernaryForm xyz = TernaryForm::monomial(1, 1, 1, Rational(1));
    TernaryForm inner = f53().scaled(Rational(888)) + xyz.scaled(Rational(273));
    return (l1 * l2 * l3 * l4 * l * l).scaled(Rational(2496)) + inner * inner;
}

std::vector<ProjectivePoint> t54() {
    return {pt(1, 1, 1),  pt(1, -1, 1), pt(-1, 1, 1), pt(-1, -1, 1),
            pt(1, 0, 1),  pt(-1, 0, 1), pt(0, 1, 1),  pt(0, -1, 1)};
}

TernaryForm f54() {
    TernaryForm f(3);
    f.add_term(3, 0, 0, Rational(1));
    f.add_term(1, 0, 2, Rational(-1));
    return f;
}

TernaryForm f54_prime() {
    TernaryForm f(3);
    f.add_term(0, 3, 0, Rational(1));
    f.add_term(0, 1, 2, Rational(-1));
    return f;
}

TernaryForm robinson() {
    TernaryForm r(6);
    r.add_term(6, 0, 0, Rational(1));
    r.add_term(0, 6, 0, Rational(1));
    r.add_term(0, 0, 6, Rational(1));
    r.add_term(4, 2, 0, Rational(-1));
    r.add_term(4, 0, 2, Rational(-1));
    r.add_term(2, 4, 0, Rational(-1));
    r.add_term(0, 4, 2, Rational(-1));
    r.add_term(2, 0, 4, Rational(-1));
    r.add_term(0, 2, 4, Rational(-1));
    r.add_term(2, 2, 2, Rational(3));
    return r;
}

TernaryForm nonic54() {
    TernaryForm z = TernaryForm::variable(2);
    TernaryForm zx(2), zy(2), c1(2), c2(2);
    zx.add_term(0, 0, 2, Rational(1));
    zx.add_term(2, 0, 0, Rational(-1));
    zy.add_term(0, 0, 2, Rational(1));
    zy.add_term(0, 2, 0, Rational(-1));
    c1.add_term(2, 0, 0, Rational(1));
    c1.add_term(1, 1, 0, Rational(1));
    c1.add_term(0, 2, 0, Rational(1));
    c1.add_term(0, 0, 2, Rational(-1));
    c2.add_term(2, 0, 0, Rational(1));
    c2.add_term(1, 1, 0, Rational(-1));
    c2.add_term(0, 2, 0, Rational(1));
    c2.add_term(0, 0, 2, Rational(-1));
    return z * zx * zy * c1 * c2;
}

ProjectivePoint p54(const Rational& u) { return ProjectivePoint(Rational(1), u, Rational(0)); }

std::vector<ProjectivePoint> s54(const Rational& u) {
    auto s = t54();
    s.push_back(p54(u));
    return s;
}

TernaryForm x54(const Rational& u) {
    return f54().scaled(u.pow(3)) - f54_prime();
}

TernaryForm q54(const Rational& u) {
    TernaryForm f = f54(), fp = f54_prime();
    TernaryForm a(2), b(2), c(2);
    a.add_term(2, 0, 0, Rational(1));
    a.add_term(0, 0, 2, Rational(-1));
    b.add_term(0, 2, 0, Rational(1));
    b.add_term(0, 0, 2, Rational(-1));
    c.add_term(2, 0, 0, Rational(1));
    c.add_term(0, 2, 0, Rational(1));
    c.add_term(0, 0, 2, Rational(-1));
    Rational u2 = u * u;
    return (f * f).scaled(u2.pow(3) * (u2 + Rational(2))) -
           (a * b * c).scaled(Rational(3) * u2 * u2) +
           (fp * fp).scaled(Rational(2) * u2 + Rational(1));
}

std::vector<ProjectivePoint> s55(const Rational& u) {
    std::vector<ProjectivePoint> s;
    auto add_perms = [&](const Rational& a, const Rational& b, const Rational& c) {
        const Rational* v[3] = {&a, &b, &c};
        int idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& p : idx) {
            ProjectivePoint P(*v[p[0]], *v[p[1]], *v[p[2]]);
            bool dup = false;
            for (auto& q : s)
                if (q == P) dup = true;
            if (!dup) s.push_back(P);
        }
    };
    add_perms(Rational(1), Rational(0), Rational(0));
    add_perms(Rational(1), Rational(-1), Rational(0));
    add_perms(Rational(1), Rational(1), u);
    return s;
}

TernaryForm f55(const Rational& u) {
    TernaryForm xyz = TernaryForm::monomial(1, 1, 1, Rational(1));
    return xyz.scaled(Rational(2) * (u * u + u + Rational(1))) - sym_sum_pow(2, 1).scaled(u);
}

TernaryForm q55(const Rational& u) {
    Rational u2 = u * u;
    Rational a = u2;
    Rational b = Rational(-2) * (u2 - Rational(2));
    Rational c = Rational(2) * u2;
    // coefficient of the x^3 y^2 z orbit; forced by the double vanishing on
    // the configuration, see tests/test_interpolation.cpp
    Rational d = Rational(-2) * (u2 + Rational(2) * u + Rational(2));
    Rational e = Rational(6) * (u2 + Rational(4) * u + Rational(2));
    return sym_sum_pow(4, 2).scaled(a) + sym_top(4).scaled(b) + sym_pair_pow(3, 3).scaled(c) +
           sym_mixed().scaled(d) + TernaryForm::monomial(2, 2, 2, e);
}

std::vector<ProjectivePoint> robinson_points() {
    return {pt(1, 1, 1),  pt(1, 1, -1), pt(1, -1, 1), pt(-1, 1, 1), pt(1, 0, 1),
            pt(-1, 0, 1), pt(0, 1, 1),  pt(0, -1, 1), pt(1, 1, 0),  pt(1, -1, 0)};
}

}  // namespace sextic::fixtures

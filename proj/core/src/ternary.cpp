#include "sextic/ternary.hpp"

#include <cctype>
#include <sstream>

namespace sextic {

TernaryForm TernaryForm::monomial(int i, int j, int k, const Rational& c) {
    if (i < 0 || j < 0 || k < 0) throw invalid_input("negative exponent");
    TernaryForm f(i + j + k);
    if (!c.is_zero()) f.terms_[ExpTriple{{i, j, k}}] = c;
    return f;
}

TernaryForm TernaryForm::linear(const Rational& a, const Rational& b, const Rational& c) {
    TernaryForm f(1);
    f.add_term(1, 0, 0, a);
    f.add_term(0, 1, 0, b);
    f.add_term(0, 0, 1, c);
    return f;
}

Rational TernaryForm::coeff(int i, int j, int k) const {
    auto it = terms_.find(ExpTriple{{i, j, k}});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TernaryForm::add_term(int i, int j, int k, const Rational& c) {
    if (c.is_zero()) return;
    if (i + j + k != degree_) {
        if (terms_.empty() && degree_ == 0)
            degree_ = i + j + k;  // fresh form adopts its first term's degree
        else
            throw invalid_input("non-homogeneous term");
    }
    ExpTriple t{{i, j, k}};
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_[t] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TernaryForm TernaryForm::operator-() const {
    TernaryForm r(degree_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
    if (!a.is_zero() && !b.is_zero() && a.degree_ != b.degree_)
        throw invalid_input("adding forms of different degrees");
    TernaryForm r = a.is_zero() ? TernaryForm(b.degree_) : TernaryForm(a.degree_);
    r.terms_ = a.terms_;
    for (auto& [e, c] : b.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return a + (-b); }

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm r(a.degree_ + b.degree_);
    if (a.is_zero() || b.is_zero()) return r;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_)
            r.add_term(ea.e[0] + eb.e[0], ea.e[1] + eb.e[1], ea.e[2] + eb.e[2], ca * cb);
    return r;
}

TernaryForm TernaryForm::scaled(const Rational& s) const {
    TernaryForm r(degree_);
    if (s.is_zero()) return r;
    for (auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
}

TernaryForm TernaryForm::pow(unsigned e) const {
    TernaryForm r = TernaryForm::constant(Rational(1));
    TernaryForm base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

TernaryForm TernaryForm::partial(int var) const {
    TernaryForm r(degree_ > 0 ? degree_ - 1 : 0);
    for (auto& [e, c] : terms_) {
        if (e.e[var] == 0) continue;
        int ne[3] = {e.e[0], e.e[1], e.e[2]};
        ne[var] -= 1;
        r.add_term(ne[0], ne[1], ne[2], c * Rational(e.e[var]));
    }
    return r;
}

Rational TernaryForm::evaluate(const Rational& x0, const Rational& x1, const Rational& x2) const {
    Rational acc(0);
    for (auto& [e, c] : terms_)
        acc += c * x0.pow((unsigned)e.e[0]) * x1.pow((unsigned)e.e[1]) * x2.pow((unsigned)e.e[2]);
    return acc;
}

std::string TernaryForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        bool printed = false;
        if (a != Rational(1) || e.degree() == 0) {
            os << a.str();
            printed = true;
        }
        for (int v = 0; v < 3; ++v) {
            if (e.e[v] == 0) continue;
            if (printed) os << " ";
            printed = true;
            os << "x" << v;
            if (e.e[v] > 1) os << "^" << e.e[v];
        }
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

}  // namespace

TernaryForm TernaryForm::parse(const std::string& text) {
    // sum of terms "c x0^i x1^j x2^k", "*" optional, coefficient optional
    TernaryForm f;
    size_t i = 0;
    bool any = false;
    int degree = -1;
    while (true) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        int sgn = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sgn = -1;
            ++i;
            skip_ws(text, i);
        } else if (any) {
            throw invalid_input("expected '+' or '-' in form literal");
        }
        // coefficient
        std::string num;
        while (i < text.size() && (isdigit((unsigned char)text[i]) || text[i] == '/' || text[i] == '.'))
            num += text[i++];
        Rational c = num.empty() ? Rational(1) : Rational::parse(num);
        if (sgn < 0) c = -c;
        int e[3] = {0, 0, 0};
        while (true) {
            skip_ws(text, i);
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws(text, i);
            }
            if (i + 1 < text.size() && text[i] == 'x' && isdigit((unsigned char)text[i + 1])) {
                int v = text[i + 1] - '0';
                if (v > 2) throw invalid_input("variable index out of range");
                i += 2;
                int ex = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    std::string d;
                    while (i < text.size() && isdigit((unsigned char)text[i])) d += text[i++];
                    if (d.empty()) throw invalid_input("missing exponent");
                    ex = std::stoi(d);
                }
                e[v] += ex;
            } else {
                break;
            }
        }
        if (num.empty() && e[0] == 0 && e[1] == 0 && e[2] == 0)
            throw invalid_input("empty term in form literal");
        int d = e[0] + e[1] + e[2];
        if (degree < 0) degree = d;
        if (d != degree) throw invalid_input("non-homogeneous input");
        if (f.is_zero()) f = TernaryForm(degree);
        f.add_term(e[0], e[1], e[2], c);
        any = true;
    }
    if (!any) throw invalid_input("empty form literal");
    return f;
}

ProjectivePoint::ProjectivePoint(Rational a, Rational b, Rational d) : c{a, b, d} {
    int last = -1;
    for (int i = 2; i >= 0; --i)
        if (!c[(size_t)i].is_zero()) {
            last = i;
            break;
        }
    if (last < 0) throw invalid_input("projective point needs a nonzero coordinate");
    Rational s = c[(size_t)last];
    for (auto& x : c) x /= s;
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
    for (int i = 0; i < 3; ++i) {
        if (c[(size_t)i] < o.c[(size_t)i]) return true;
        if (o.c[(size_t)i] < c[(size_t)i]) return false;
    }
    return false;
}

std::string ProjectivePoint::str() const {
    return "(" + c[0].str() + " : " + c[1].str() + " : " + c[2].str() + ")";
}

bool AlgebraicPoint::is_rational() const {
    if (alpha.is_rational()) return true;
    return c[0].deg() <= 0 && c[1].deg() <= 0 && c[2].deg() <= 0;
}

ProjectivePoint AlgebraicPoint::to_rational() const {
    if (alpha.is_rational()) {
        const Rational& a = alpha.rational_value();
        return ProjectivePoint(c[0].eval(a), c[1].eval(a), c[2].eval(a));
    }
    if (!is_rational()) throw computation_error("point is not rational");
    return ProjectivePoint(c[0].coeff(0), c[1].coeff(0), c[2].coeff(0));
}

std::array<Ran, 3> AlgebraicPoint::coords() const {
    std::array<Ran, 3> out;
    for (int i = 0; i < 3; ++i) out[(size_t)i] = ran_of_polynomial(alpha, c[(size_t)i]);
    return out;
}

std::string AlgebraicPoint::str() const {
    auto cs = coords();
    std::string s = "(";
    for (int i = 0; i < 3; ++i) {
        if (i) s += " : ";
        if (cs[(size_t)i].is_rational())
            s += cs[(size_t)i].rational_value().str();
        else
            s += cs[(size_t)i].decimal(6) + "~";
    }
    return s + ")";
}

Mat3 Mat3::identity() {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.m[i][j] = Rational(i == j ? 1 : 0);
    return t;
}

Rational Mat3::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 Mat3::mul(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s(0);
            for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Mat3 Mat3::inverse() const {
    Rational d = det();
    if (d.is_zero()) throw invalid_input("singular matrix");
    Mat3 r;
    r.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    r.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    r.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    r.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    r.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    r.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    r.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    r.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    r.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return r;
}

ProjectivePoint Mat3::apply(const ProjectivePoint& p) const {
    Rational r[3];
    for (int i = 0; i < 3; ++i) {
        r[i] = Rational(0);
        for (int j = 0; j < 3; ++j) r[i] += m[i][j] * p.c[(size_t)j];
    }
    return ProjectivePoint(r[0], r[1], r[2]);
}

std::array<TernaryForm, 3> partials(const TernaryForm& f) {
    return {f.partial(0), f.partial(1), f.partial(2)};
}

TernaryForm jacobian_det(const TernaryForm& f, const TernaryForm& g, const TernaryForm& h) {
    auto pf = partials(f), pg = partials(g), ph = partials(h);
    TernaryForm det = pf[0] * (pg[1] * ph[2] - pg[2] * ph[1]) -
                      pf[1] * (pg[0] * ph[2] - pg[2] * ph[0]) +
                      pf[2] * (pg[0] * ph[1] - pg[1] * ph[0]);
    return det;
}

TernaryForm apply_projectivity(const TernaryForm& f, const Mat3& T) {
    if (T.det().is_zero()) throw invalid_input("projectivity matrix is singular");
    if (f.is_zero()) return f;
    // images of the variables
    TernaryForm img[3];
    for (int i = 0; i < 3; ++i) img[i] = TernaryForm::linear(T.m[i][0], T.m[i][1], T.m[i][2]);
    // powers up to the degree, built once
    int d = f.degree();
    std::array<std::vector<TernaryForm>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[(size_t)v].push_back(TernaryForm::constant(Rational(1)));
        for (int e = 1; e <= d; ++e)
            pw[(size_t)v].push_back(pw[(size_t)v].back() * img[v]);
    }
    TernaryForm r(d);
    for (auto& [e, c] : f.terms()) {
        TernaryForm t = pw[0][(size_t)e.e[0]] * pw[1][(size_t)e.e[1]] * pw[2][(size_t)e.e[2]];
        r = r + t.scaled(c);
    }
    return r;
}

int evaluate_sign(const TernaryForm& f, const ProjectivePoint& p) {
    return f.evaluate(p.c[0], p.c[1], p.c[2]).sign();
}

int evaluate_sign(const TernaryForm& f, const AlgebraicPoint& p) {
    if (p.alpha.is_rational()) {
        const Rational& a = p.alpha.rational_value();
        return f.evaluate(p.c[0].eval(a), p.c[1].eval(a), p.c[2].eval(a)).sign();
    }
    QPoly acc;
    for (auto& [e, c] : f.terms()) {
        QPoly t = QPoly::constant(c);
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e.e[v]; ++k) t = t * p.c[(size_t)v];
        acc = acc + t;
    }
    return sign_at(acc, p.alpha);
}

bool vanishes_at(const TernaryForm& f, const ProjectivePoint& p) { return evaluate_sign(f, p) == 0; }
bool vanishes_at(const TernaryForm& f, const AlgebraicPoint& p) { return evaluate_sign(f, p) == 0; }

TernaryForm canonical_normalize(const TernaryForm& f) {
    if (f.is_zero()) return f;
    Rational ct(0);
    for (auto& [e, c] : f.terms()) ct = content_gcd(ct, c);
    if (f.terms().begin()->second.sign() < 0) ct = -ct;
    return f.scaled(ct.inverse());
}

bool proportional(const TernaryForm& a, const TernaryForm& b, bool positive_only) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    if (a.terms().size() != b.terms().size()) return false;
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    if (!(ita->first == itb->first)) return false;
    Rational ratio = itb->second / ita->second;
    if (positive_only && ratio.sign() <= 0) return false;
    for (; ita != a.terms().end(); ++ita, ++itb) {
        if (!(ita->first == itb->first)) return false;
        if (itb->second != ita->second * ratio) return false;
    }
    return true;
}

BiPoly dehomogenize(const TernaryForm& f, int chart_var) {
    int a = -1, b = -1;  // inner, outer
    for (int v = 0; v < 3; ++v) {
        if (v == chart_var) continue;
        if (a < 0) a = v;
        else b = v;
    }
    BiPoly out;
    for (auto& [e, c] : f.terms()) {
        QPoly inner = out.coeff(e.e[b]);
        inner.set_coeff(e.e[a], inner.coeff(e.e[a]) + c);
        out.set_coeff(e.e[b], inner);
    }
    return out;
}

TernaryForm homogenize(const BiPoly& p, int degree, int chart_var) {
    int a = -1, b = -1;
    for (int v = 0; v < 3; ++v) {
        if (v == chart_var) continue;
        if (a < 0) a = v;
        else b = v;
    }
    TernaryForm f(degree);
    for (int j = 0; j <= p.deg(); ++j) {
        const QPoly& q = p.coeff(j);
        for (int i = 0; i <= q.deg(); ++i) {
            if (q.coeff(i).is_zero()) continue;
            int e[3] = {0, 0, 0};
            e[a] = i;
            e[b] = j;
            e[chart_var] = degree - i - j;
            if (e[chart_var] < 0) throw invalid_input("degree too small to homogenize");
            f.add_term(e[0], e[1], e[2], q.coeff(i));
        }
    }
    return f;
}

QPoly line_restriction(const TernaryForm& f, int k) {
    int a = -1, b = -1;
    for (int v = 0; v < 3; ++v) {
        if (v == k) continue;
        if (a < 0) a = v;
        else b = v;
    }
    QPoly out;
    for (auto& [e, c] : f.terms()) {
        if (e.e[k] != 0) continue;
        out.set_coeff(e.e[a], out.coeff(e.e[a]) + c);
    }
    return out;
}

namespace {

// split off the largest power of the chart variable
int chart_var_power(const TernaryForm& f, int v) {
    int mn = f.degree();
    for (auto& [e, c] : f.terms()) {
        (void)c;
        mn = std::min(mn, e.e[v]);
    }
    return mn;
}

TernaryForm divide_power(const TernaryForm& f, int v, int k) {
    TernaryForm r(f.degree() - k);
    for (auto& [e, c] : f.terms()) {
        int ne[3] = {e.e[0], e.e[1], e.e[2]};
        ne[v] -= k;
        r.add_term(ne[0], ne[1], ne[2], c);
    }
    return r;
}

int bipoly_total_degree(const BiPoly& p) {
    int d = -1;
    for (int j = 0; j <= p.deg(); ++j)
        if (!p.coeff(j).is_zero()) d = std::max(d, j + p.coeff(j).deg());
    return d;
}

}  // namespace

TernaryForm form_gcd(const TernaryForm& f, const TernaryForm& g) {
    if (f.is_zero() && g.is_zero()) throw invalid_input("gcd of two zero forms");
    if (f.is_zero()) return canonical_normalize(g);
    if (g.is_zero()) return canonical_normalize(f);
    int pf = chart_var_power(f, 2), pg = chart_var_power(g, 2);
    TernaryForm fh = divide_power(f, 2, pf), gh = divide_power(g, 2, pg);
    BiPoly a = dehomogenize(fh, 2), b = dehomogenize(gh, 2);
    BiPoly gg = poly_gcd(a, b);
    int d = bipoly_total_degree(gg);
    TernaryForm h = homogenize(gg, d, 2);
    TernaryForm zpow = TernaryForm::monomial(0, 0, std::min(pf, pg), Rational(1));
    return canonical_normalize(h * zpow);
}

bool form_divides(const TernaryForm& d, const TernaryForm& f) {
    if (d.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    TernaryForm g = form_gcd(d, f);
    return g.degree() == d.degree() && proportional(g, d);
}

TernaryForm form_divexact(const TernaryForm& f, const TernaryForm& d) {
    if (d.is_zero()) throw invalid_input("division by the zero form");
    if (f.is_zero()) return TernaryForm(std::max(0, f.degree() - d.degree()));
    int pf = chart_var_power(f, 2), pd = chart_var_power(d, 2);
    if (pf < pd) throw computation_error("inexact form division");
    BiPoly a = dehomogenize(divide_power(f, 2, pf), 2);
    BiPoly b = dehomogenize(divide_power(d, 2, pd), 2);
    BiPoly q = poly_divexact(a, b);
    TernaryForm h = homogenize(q, f.degree() - d.degree() - (pf - pd), 2);
    TernaryForm zpow = TernaryForm::monomial(0, 0, pf - pd, Rational(1));
    TernaryForm res = h * zpow;
    if (!(res * d == f)) throw computation_error("inexact form division");
    return res;
}

}  // namespace sextic

#include "sextic/ran.hpp"

#include <functional>
#include <sstream>

namespace sextic {

namespace {

QPoly defining_of_rational(const Rational& r) {
    // den*x - num, primitive
    return integer_primitive(QPoly({-r, Rational(1)}));
}

// lift q(x) into (Q[v])[x]: constant-in-v coefficients
BiPoly lift_const_inner(const QPoly& q) {
    std::vector<QPoly> cs;
    for (int i = 0; i <= q.deg(); ++i) cs.push_back(QPoly::constant(q.coeff(i)));
    return BiPoly(std::move(cs));
}

}  // namespace

Ran Ran::of_rational(const Rational& r) {
    Ran a;
    a.defining_ = defining_of_rational(r);
    a.lo_ = a.hi_ = r;
    return a;
}

Ran Ran::from_isolated(const IsolatedRoot& ir) {
    Ran a;
    if (ir.is_rational()) return of_rational(ir.lo);
    a.defining_ = ir.defining;
    a.lo_ = ir.lo;
    a.hi_ = ir.hi;
    return a;
}

const Rational& Ran::rational_value() const {
    if (!is_rational()) throw computation_error("not a rational value");
    return lo_;
}

void Ran::refine() const {
    if (is_rational()) return;
    Rational m = (lo_ + hi_) / Rational(2);
    int sm = sign_at_rational(defining_, m);
    if (sm == 0) {
        lo_ = hi_ = m;
        return;
    }
    int slo = sign_at_rational(defining_, lo_);
    if (slo != sm)
        hi_ = m;
    else
        lo_ = m;
}

void Ran::refine_below(const Rational& width) const {
    while (!is_rational() && hi_ - lo_ >= width) refine();
}

int Ran::sign() const {
    if (is_rational()) return lo_.sign();
    // zero is rational, so an irrational value separates from 0 by refinement
    while (lo_.sign() <= 0 && hi_.sign() >= 0) {
        refine();
        if (is_rational()) return lo_.sign();
    }
    return lo_.sign() > 0 ? 1 : -1;
}

double Ran::approx() const {
    refine_below(Rational(1, 1l << 60));
    return ((lo_ + hi_) / Rational(2)).to_double();
}

std::string Ran::decimal(int digits) const {
    Rational w = Rational(1);
    for (int i = 0; i < digits + 2; ++i) w = w / Rational(10);
    refine_below(w);
    Rational m = (lo_ + hi_) / Rational(2);
    // render m to the requested number of fractional digits
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, (unsigned)digits);
    mpq_class scaled = m.raw() * mpq_class(scale);
    mpz_class rounded;
    mpz_class num = scaled.get_num(), den = scaled.get_den();
    mpz_class twice = 2 * num + den;  // round half up on the positive side
    if (sgn(num) >= 0) {
        mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    } else {
        mpz_class twice2 = 2 * num - den;
        mpz_cdiv_q(rounded.get_mpz_t(), twice2.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    }
    bool neg = sgn(rounded) < 0;
    mpz_class mag = abs(rounded);
    std::string ds = mag.get_str();
    while ((int)ds.size() <= digits) ds = "0" + ds;
    std::string ip = ds.substr(0, ds.size() - (size_t)digits);
    std::string fp = ds.substr(ds.size() - (size_t)digits);
    std::ostringstream os;
    if (neg) os << "-";
    os << ip;
    if (digits > 0) os << "." << fp;
    return os.str();
}

int sign_at(const QPoly& p, const Ran& a) {
    if (p.is_zero()) return 0;
    if (a.is_rational()) return sign_at_rational(p, a.rational_value());
    QPoly g = poly_gcd(p, a.defining());
    if (g.deg() >= 1) {
        int sl = sign_at_rational(g, a.lo());
        int sh = sign_at_rational(g, a.hi());
        if (sl == 0 || sh == 0)
            throw computation_error("isolating interval endpoint is a root");
        if (sl != sh) return 0;
    }
    // p(a) != 0 now; interval evaluation converges to it
    while (true) {
        QInterval img = iv_eval(p, a.box());
        if (!img.contains_zero()) return img.lo.sign() > 0 ? 1 : -1;
        a.refine();
        if (a.is_rational()) return sign_at_rational(p, a.rational_value());
    }
}

int ran_compare_rat(const Ran& a, const Rational& r) {
    if (a.is_rational()) {
        const Rational& v = a.rational_value();
        return v < r ? -1 : (v == r ? 0 : 1);
    }
    if (a.hi() < r) return -1;
    if (a.lo() > r) return 1;
    if (sign_at_rational(a.defining(), r) == 0 && a.lo() < r && r < a.hi()) return 0;
    // separate by refinement (a != r)
    Ran c = a;
    while (c.lo() <= r && r <= c.hi()) {
        c.refine();
        if (c.is_rational()) return c.rational_value() < r ? -1 : (c.rational_value() == r ? 0 : 1);
    }
    return c.hi() < r ? -1 : 1;
}

int ran_compare(const Ran& a, const Ran& b) {
    if (b.is_rational()) return ran_compare_rat(a, b.rational_value());
    if (a.is_rational()) return -ran_compare_rat(b, a.rational_value());
    if (a.hi() < b.lo()) return -1;
    if (b.hi() < a.lo()) return 1;
    // equality test via common factor
    QPoly g = poly_gcd(a.defining(), b.defining());
    if (g.deg() >= 1) {
        for (const auto& ir : isolate_real_roots(g)) {
            Ran gamma = Ran::from_isolated(ir);
            // gamma is a root of both definings; inside both intervals => equal
            bool in_a = ran_compare_rat(gamma, a.lo()) > 0 && ran_compare_rat(gamma, a.hi()) < 0;
            if (!in_a) continue;
            bool in_b = ran_compare_rat(gamma, b.lo()) > 0 && ran_compare_rat(gamma, b.hi()) < 0;
            if (in_b) return 0;
        }
    }
    // distinct: refine until the intervals separate
    Ran ca = a, cb = b;
    while (true) {
        if (ca.hi() < cb.lo()) return -1;
        if (cb.hi() < ca.lo()) return 1;
        if (ca.is_rational() && cb.is_rational())
            return ca.rational_value() < cb.rational_value() ? -1 : 1;
        if (ca.is_rational()) return -ran_compare_rat(cb, ca.rational_value());
        if (cb.is_rational()) return ran_compare_rat(ca, cb.rational_value());
        ca.refine();
        cb.refine();
    }
}

Ran ran_neg(const Ran& a) {
    if (a.is_rational()) return Ran::of_rational(-a.rational_value());
    std::vector<Rational> cs;
    const QPoly& d = a.defining();
    for (int i = 0; i <= d.deg(); ++i)
        cs.push_back((i & 1) ? -d.coeff(i) : d.coeff(i));
    IsolatedRoot ir{integer_primitive(QPoly(std::move(cs))), -a.hi(), -a.lo()};
    return Ran::from_isolated(ir);
}

std::vector<Ran> real_roots_of(const QPoly& p) {
    std::vector<Ran> out;
    for (const auto& ir : isolate_real_roots(p)) out.push_back(Ran::from_isolated(ir));
    return out;
}

namespace {

// match the value known to be a root of cand and contained in the shrinking
// box-valued function `image`
Ran isolate_value(const QPoly& cand, const std::vector<Ran>& roots,
                  const std::function<QInterval()>& image,
                  const std::function<void()>& refine_inputs) {
    (void)cand;
    int guard = 0;
    while (true) {
        QInterval J = image();
        int hits = 0;
        const Ran* hit = nullptr;
        for (const auto& r : roots) {
            if (r.hi() < J.lo || r.lo() > J.hi) continue;
            ++hits;
            hit = &r;
        }
        if (hits == 1) return *hit;
        if (hits == 0) throw computation_error("value escaped its candidate roots");
        refine_inputs();
        if (++guard > 20000) throw computation_error("algebraic value isolation stalled");
    }
}

}  // namespace

Ran ran_of_polynomial(const Ran& a, const QPoly& p) {
    if (p.is_zero()) return Ran::of_rational(Rational(0));
    if (a.is_rational()) return Ran::of_rational(p.eval(a.rational_value()));
    // candidates: Res_x(def_a(x), v - p(x)); tower (Q[v])[x]
    BiPoly A = lift_const_inner(a.defining());
    std::vector<QPoly> vc;
    vc.push_back(QPoly({Rational(0), Rational(1)}));  // v
    BiPoly vp = BiPoly(std::move(vc));                // v as constant in x
    BiPoly pm = lift_const_inner(p);
    BiPoly body = vp - pm;  // v - p(x)
    QPoly M = poly_resultant(A, body);
    if (M.is_zero()) throw computation_error("degenerate resultant in ran_of_polynomial");
    auto roots = real_roots_of(M);
    return isolate_value(
        M, roots, [&] { return iv_eval(p, a.box()); }, [&] { a.refine(); });
}

Ran ran_of_rational_function(const Ran& a, const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw invalid_input("zero denominator");
    if (a.is_rational()) {
        Rational dv = den.eval(a.rational_value());
        if (dv.is_zero()) throw invalid_input("denominator vanishes at the point");
        return Ran::of_rational(num.eval(a.rational_value()) / dv);
    }
    QPoly D = a.defining();
    QPoly g = poly_gcd(D, den);
    if (g.deg() >= 1) {
        // a is not a root of den, so a's factor survives the split
        if (sign_at(den, a) == 0) throw invalid_input("denominator vanishes at the point");
        D = integer_primitive(poly_divexact(D, integer_primitive(g)));
    }
    // candidates: Res_x(D(x), v*den(x) - num(x))
    BiPoly A = lift_const_inner(D);
    BiPoly body;
    {
        std::vector<QPoly> nc, dc;
        for (int i = 0; i <= num.deg(); ++i) nc.push_back(QPoly::constant(num.coeff(i)));
        for (int i = 0; i <= den.deg(); ++i)
            dc.push_back(QPoly({Rational(0), den.coeff(i)}));  // v * den_i
        BiPoly N{std::vector<QPoly>(nc)};
        BiPoly VD{std::vector<QPoly>(dc)};
        body = VD - N;
    }
    QPoly M = poly_resultant(A, body);
    if (M.is_zero()) throw computation_error("degenerate resultant in ran_of_rational_function");
    auto roots = real_roots_of(M);
    auto image = [&]() -> QInterval {
        while (true) {
            QInterval dv = iv_eval(den, a.box());
            if (!dv.contains_zero()) {
                QInterval nv = iv_eval(num, a.box());
                return iv_mul(nv, QInterval{dv.hi.inverse(), dv.lo.inverse()});
            }
            a.refine();
        }
    };
    return isolate_value(M, roots, image, [&] { a.refine(); });
}

Ran ran_of_bivariate(const Ran& a, const Ran& b, const BiPoly& P) {
    if (a.is_rational()) {
        // collapse to univariate in b's variable
        QPoly q;
        for (int j = 0; j <= P.deg(); ++j) {
            Rational cj = P.coeff(j).eval(a.rational_value());
            q.set_coeff(j, cj);
        }
        return ran_of_polynomial(b, q);
    }
    if (b.is_rational()) {
        QPoly q;  // evaluate outer variable
        for (int j = P.deg(); j >= 0; --j) {
            q = q.scaled(b.rational_value()) + P.coeff(j);
        }
        return ran_of_polynomial(a, q);
    }
    using Tri = TriPoly;  // ((Q[v])[x])[y]
    // def_b(y), constant in v and x
    std::vector<BiPoly> bc;
    for (int i = 0; i <= b.defining().deg(); ++i)
        bc.push_back(BiPoly::constant(QPoly::constant(b.defining().coeff(i))));
    Tri B{std::vector<BiPoly>(bc)};
    // v - P(x,y)
    std::vector<BiPoly> body;
    for (int j = 0; j <= P.deg(); ++j) {
        body.push_back(-lift_const_inner(P.coeff(j)));
    }
    // add v to the y^0 coefficient
    {
        BiPoly v0 = body.empty() ? BiPoly() : body[0];
        std::vector<QPoly> vc;
        vc.push_back(QPoly({Rational(0), Rational(1)}));
        v0 = v0 + BiPoly(std::move(vc));
        if (body.empty())
            body.push_back(v0);
        else
            body[0] = v0;
    }
    Tri C{std::move(body)};
    BiPoly W = poly_resultant(B, C);  // in (Q[v])[x]
    BiPoly A = [&] {
        std::vector<QPoly> ac;
        for (int i = 0; i <= a.defining().deg(); ++i)
            ac.push_back(QPoly::constant(a.defining().coeff(i)));
        return BiPoly(std::move(ac));
    }();
    QPoly M = poly_resultant(A, W);
    if (M.is_zero()) throw computation_error("degenerate resultant in ran_of_bivariate");
    auto roots = real_roots_of(M);
    auto image = [&]() -> QInterval {
        QInterval r = QInterval::point(Rational(0));
        for (int j = P.deg(); j >= 0; --j) {
            r = iv_mul(r, b.box());
            r = iv_add(r, iv_eval(P.coeff(j), a.box()));
        }
        return r;
    };
    bool flip = false;
    return isolate_value(
        M, roots, image,
        [&] {
            if (flip) a.refine(); else b.refine();
            flip = !flip;
        });
}

int sign_of_bivariate(const Ran& a, const Ran& b, const BiPoly& P) {
    if (P.is_zero()) return 0;
    if (a.is_rational()) {
        QPoly q;
        for (int j = 0; j <= P.deg(); ++j) q.set_coeff(j, P.coeff(j).eval(a.rational_value()));
        return sign_at(q, b);
    }
    if (b.is_rational()) {
        QPoly q;
        for (int j = P.deg(); j >= 0; --j) q = q.scaled(b.rational_value()) + P.coeff(j);
        return sign_at(q, a);
    }
    // quick interval pass
    for (int i = 0; i < 8; ++i) {
        QInterval r = QInterval::point(Rational(0));
        for (int j = P.deg(); j >= 0; --j) {
            r = iv_mul(r, b.box());
            r = iv_add(r, iv_eval(P.coeff(j), a.box()));
        }
        if (!r.contains_zero()) return r.lo.sign() > 0 ? 1 : -1;
        a.refine();
        b.refine();
    }
    return ran_of_bivariate(a, b, P).sign();
}

Ran ran_add(const Ran& a, const Ran& b) {
    if (a.is_rational() && b.is_rational())
        return Ran::of_rational(a.rational_value() + b.rational_value());
    BiPoly P;  // x + y: coeff0 = x, coeff1 = 1
    P.set_coeff(0, QPoly({Rational(0), Rational(1)}));
    P.set_coeff(1, QPoly::constant(Rational(1)));
    return ran_of_bivariate(a, b, P);
}

Ran ran_mul(const Ran& a, const Ran& b) {
    if (a.is_rational() && b.is_rational())
        return Ran::of_rational(a.rational_value() * b.rational_value());
    BiPoly P;  // x * y
    P.set_coeff(1, QPoly({Rational(0), Rational(1)}));
    return ran_of_bivariate(a, b, P);
}

}  // namespace sextic

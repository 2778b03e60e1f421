#include "sextic/bivar.hpp"

#include <deque>

namespace sextic {

namespace {

// field division in Q[x]: a = q*b + r with deg r < deg b
void qdivrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw invalid_input("division by zero polynomial");
    q = QPoly();
    r = a;
    int db = b.deg();
    Rational lb = b.lc();
    while (!r.is_zero() && r.deg() >= db) {
        Rational c = r.lc() / lb;
        int k = r.deg() - db;
        q.set_coeff(k, q.coeff(k) + c);
        r = r - b.scaled(c).shifted_up(k);
    }
}

}  // namespace

ResidueCtx::ResidueCtx(QPoly D) : d_(std::move(D)) {
    if (d_.deg() < 1) throw invalid_input("modulus must have positive degree");
}

QPoly ResidueCtx::reduce(const QPoly& a) const {
    if (a.deg() < d_.deg()) return a;
    QPoly q, r;
    qdivrem(a, d_, q, r);
    return r;
}

QPoly ResidueCtx::inv(const QPoly& a) const {
    QPoly r0 = d_, r1 = reduce(a);
    if (r1.is_zero()) throw invalid_input("inverting zero residue");
    QPoly s0 = QPoly(), s1 = QPoly::one();
    while (r1.deg() > 0) {
        QPoly q, r2;
        qdivrem(r0, r1, q, r2);
        QPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        if (r1.is_zero()) {
            // gcd r0 is a nontrivial common factor: the modulus splits
            throw SplitNeeded{integer_primitive(r0)};
        }
    }
    // r1 is a nonzero constant: s1 / r1 is the inverse
    return reduce(s1.scaled(r1.lc().inverse()));
}

namespace {

ResPoly respoly_from(const BiPoly& p, const ResidueCtx& ctx) {
    ResPoly out;
    for (int j = 0; j <= p.deg(); ++j) out.push_back(ctx.reduce(p.coeff(j)));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

int rdeg(const ResPoly& p) { return (int)p.size() - 1; }

ResPoly rmod(const ResPoly& a, const ResPoly& b, const ResidueCtx& ctx) {
    // remainder of a by b; b's leading coefficient must be invertible
    ResPoly r = a;
    QPoly linv = ctx.inv(b.back());
    while (rdeg(r) >= rdeg(b)) {
        QPoly c = ctx.mul(r.back(), linv);
        int k = rdeg(r) - rdeg(b);
        for (int i = 0; i <= rdeg(b); ++i)
            r[(size_t)(i + k)] = ctx.reduce(r[(size_t)(i + k)] - ctx.mul(c, b[(size_t)i]));
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        if (r.empty()) break;
    }
    return r;
}

ResPoly rderiv_y(const ResPoly& a) {
    ResPoly out;
    for (size_t j = 1; j < a.size(); ++j) out.push_back(a[j].scaled(Rational((long)j)));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

ResPoly rgcd(ResPoly a, ResPoly b, const ResidueCtx& ctx) {
    while (!b.empty()) {
        ResPoly r = rmod(a, b, ctx);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

TriangularResult triangular_decompose(const BiPoly& u, const BiPoly& v) {
    if (!y_regular(u) || !y_regular(v))
        throw invalid_input("triangular decomposition needs constant leading y-coefficients");
    QPoly R = resultant_y(u, v);
    TriangularResult out;
    if (R.is_zero()) throw invalid_input("inputs share a curve component");
    QPoly S = squarefree_part(R);
    if (S.deg() == 0) return out;  // no solutions at finite x
    std::deque<QPoly> queue{S};
    while (!queue.empty()) {
        QPoly D = std::move(queue.front());
        queue.pop_front();
        if (D.deg() == 0) continue;
        try {
            ResidueCtx ctx(D);
            ResPoly a = respoly_from(u, ctx), b = respoly_from(v, ctx);
            ResPoly g = rgcd(a, b, ctx);
            if (rdeg(g) < 1)
                throw computation_error("eliminant root without a fiber solution");
            // squarefree in y
            ResPoly gs = rgcd(g, rderiv_y(g), ctx);
            if (rdeg(gs) >= 1) {
                // divide g by gs via monic reduction: compute g / gs
                // using repeated elimination; do it with the remainder trick
                QPoly li = ctx.inv(gs.back());
                ResPoly q;  // quotient of g by gs
                ResPoly r = g;
                q.assign((size_t)(rdeg(g) - rdeg(gs) + 1), QPoly());
                while (rdeg(r) >= rdeg(gs)) {
                    QPoly c = ctx.mul(r.back(), li);
                    int k = rdeg(r) - rdeg(gs);
                    q[(size_t)k] = ctx.reduce(q[(size_t)k] + c);
                    for (int i = 0; i <= rdeg(gs); ++i)
                        r[(size_t)(i + k)] =
                            ctx.reduce(r[(size_t)(i + k)] - ctx.mul(c, gs[(size_t)i]));
                    while (!r.empty() && r.back().is_zero()) r.pop_back();
                    if (r.empty()) break;
                }
                g = q;
                while (!g.empty() && g.back().is_zero()) g.pop_back();
            }
            if (rdeg(g) != 1) {
                out.needs_shear = true;
                continue;
            }
            QPoly lead_inv = ctx.inv(g[1]);
            QPoly w = ctx.reduce(-(ctx.mul(g[0], lead_inv)));
            out.bundles.push_back(TriBundle{D, w});
        } catch (const SplitNeeded& s) {
            QPoly f1 = integer_primitive(s.factor);
            QPoly f2 = integer_primitive(poly_divexact(integer_primitive(D), f1));
            queue.push_back(f1);
            queue.push_back(f2);
        }
    }
    return out;
}

std::vector<RealFiberPoint> real_fiber_points(const TriangularResult& tri) {
    std::vector<RealFiberPoint> out;
    for (const auto& b : tri.bundles)
        for (const auto& ir : isolate_real_roots(b.dx))
            out.push_back(RealFiberPoint{Ran::from_isolated(ir), b.yval});
    return out;
}

int sign_at_fiber(const BiPoly& g, const RealFiberPoint& p) {
    QPoly s = bipoly_substitute_y(g, p.yval);
    return sign_at(s, p.x);
}

BiPoly bipoly_shear(const BiPoly& p, const Rational& lambda) {
    if (lambda.is_zero()) return p;
    // x -> x + lambda * y
    BiPoly X;  // x + lambda y as a BiPoly
    X.set_coeff(0, QPoly({Rational(0), Rational(1)}));
    X.set_coeff(1, QPoly::constant(lambda));
    BiPoly out;
    BiPoly ypow = BiPoly::one();
    for (int j = 0; j <= p.deg(); ++j) {
        // coeff_j(x + lambda y) * y^j
        const QPoly& cj = p.coeff(j);
        BiPoly sub;
        for (int i = cj.deg(); i >= 0; --i)
            sub = sub * X + BiPoly::constant(QPoly::constant(cj.coeff(i)));
        out = out + sub * ypow;
        ypow = ypow.shifted_up(1);
    }
    return out;
}

QPoly bipoly_at_x(const BiPoly& p, const Rational& x0) {
    QPoly out;
    for (int j = 0; j <= p.deg(); ++j) out.set_coeff(j, p.coeff(j).eval(x0));
    return out;
}

QPoly bipoly_substitute_y(const BiPoly& p, const QPoly& w) {
    QPoly out;
    for (int j = p.deg(); j >= 0; --j) out = out * w + p.coeff(j);
    return out;
}

Rational bipoly_eval(const BiPoly& p, const Rational& x0, const Rational& y0) {
    Rational out(0);
    for (int j = p.deg(); j >= 0; --j) out = out * y0 + p.coeff(j).eval(x0);
    return out;
}

QPoly resultant_y(const BiPoly& u, const BiPoly& v) { return poly_resultant(u, v); }

BiPoly bipoly_derivative_x(const BiPoly& p) {
    BiPoly out;
    for (int j = 0; j <= p.deg(); ++j) out.set_coeff(j, p.coeff(j).derivative());
    return out;
}

bool y_regular(const BiPoly& p) { return !p.is_zero() && p.lc().deg() == 0; }

int bipoly_total_deg(const BiPoly& p) {
    int d = -1;
    for (int j = 0; j <= p.deg(); ++j)
        if (!p.coeff(j).is_zero()) d = std::max(d, j + p.coeff(j).deg());
    return d;
}

}  // namespace sextic

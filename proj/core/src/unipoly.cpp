#include "sextic/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace sextic {

QPoly qpoly_from(std::initializer_list<long> ascending) {
    std::vector<Rational> cs;
    for (long v : ascending) cs.emplace_back(v);
    return QPoly(std::move(cs));
}

QPoly qpoly_from_rationals(std::vector<Rational> ascending) { return QPoly(std::move(ascending)); }

std::string qpoly_str(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.deg(); i >= 0; --i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (i == 0 || a != Rational(1)) os << a.str();
        if (i > 0) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly integer_primitive(const QPoly& p) {
    if (p.is_zero()) return p;
    Rational ct = poly_content(p);
    if (p.lc().sign() < 0) ct = -ct;
    std::vector<Rational> cs;
    for (int i = 0; i <= p.deg(); ++i) cs.push_back(p.coeff(i) / ct);
    return QPoly(std::move(cs));
}

QPoly squarefree_part(const QPoly& p) {
    if (p.is_zero()) return p;
    if (p.deg() == 0) return QPoly::one();
    QPoly g = poly_gcd(p, p.derivative());
    if (g.deg() == 0) return integer_primitive(p);
    return integer_primitive(poly_divexact(integer_primitive(p), integer_primitive(g)));
}

Rational eval_at(const QPoly& p, const Rational& x) { return p.eval(x); }
int sign_at_rational(const QPoly& p, const Rational& x) { return p.eval(x).sign(); }

QInterval iv_add(const QInterval& a, const QInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
QInterval iv_sub(const QInterval& a, const QInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
QInterval iv_mul(const QInterval& a, const QInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
}
QInterval iv_pow(const QInterval& a, unsigned e) {
    QInterval r = QInterval::point(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = iv_mul(r, a);
    return r;
}
QInterval iv_eval(const QPoly& p, const QInterval& x) {
    QInterval r = QInterval::point(Rational(0));
    for (int i = p.deg(); i >= 0; --i) {
        r = iv_mul(r, x);
        r = iv_add(r, QInterval::point(p.coeff(i)));
    }
    return r;
}

SturmChain::SturmChain(const QPoly& p) {
    QPoly f = squarefree_part(p);
    if (f.is_zero()) throw invalid_input("Sturm chain of zero polynomial");
    seq.push_back(f);
    if (f.deg() == 0) return;
    seq.push_back(integer_primitive(f.derivative()));
    while (seq.back().deg() > 0) {
        QPoly r = prem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        // normalize to a positive multiple of the true remainder, then negate
        if (seq.back().lc().sign() < 0 &&
            ((seq[seq.size() - 2].deg() - seq.back().deg() + 1) & 1))
            r = -r;
        r = -r;
        Rational ct = poly_content(r);
        std::vector<Rational> cs;
        for (int i = 0; i <= r.deg(); ++i) cs.push_back(r.coeff(i) / ct);
        seq.push_back(QPoly(std::move(cs)));
    }
}

static int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    for (const auto& q : seq) signs.push_back(sign_at_rational(q, x));
    return variations(signs);
}
int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& q : seq) {
        int s = q.lc().sign();
        if (q.deg() & 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}
int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& q : seq) signs.push_back(q.lc().sign());
    return variations(signs);
}
int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}
int SturmChain::count_all_roots() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

Rational root_bound(const QPoly& p) {
    if (p.deg() <= 0) return Rational(1);
    Rational m(0);
    Rational lc = p.lc().abs();
    for (int i = 0; i < p.deg(); ++i) {
        Rational q = p.coeff(i).abs() / lc;
        if (q > m) m = q;
    }
    return m + Rational(1);
}

Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw invalid_input("empty interval");
    if (lo == hi) return lo;
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_in_interval(-hi, -lo);
    // 0 < lo < hi: walk the continued fraction of the endpoints
    mpz_class fl = lo.num() / lo.den();  // floor, endpoints positive
    Rational f{mpz_class(fl)};
    if (f == lo) return lo;
    if (f + Rational(1) <= hi) return f + Rational(1);
    Rational y = simplest_in_interval((hi - f).inverse(), (lo - f).inverse());
    return f + y.inverse();
}

namespace {

// denominator-bound-driven rational-root collapse
std::optional<Rational> try_rational_root(const QPoly& sf, Rational lo, Rational hi,
                                          const SturmChain& chain) {
    // refine until the simplest rational in the interval is the root or
    // clearly absent; the denominator of any rational root divides lc
    int rounds = 0;
    while (rounds < 96) {
        Rational s = simplest_in_interval(lo, hi);
        if (sign_at_rational(sf, s) == 0) return s;
        // bisect, keeping the unique root
        Rational m = (lo + hi) / Rational(2);
        if (m == s) m = (lo + Rational(3) * hi) / Rational(4);
        int sm = sign_at_rational(sf, m);
        if (sm == 0) return m;
        if (chain.count_roots(lo, m) == 1)
            hi = m;
        else
            lo = m;
        ++rounds;
    }
    return std::nullopt;
}

void isolate_rec(const QPoly& sf, const SturmChain& chain, Rational lo, Rational hi, int count,
                 std::vector<IsolatedRoot>& out) {
    if (count <= 0) return;
    if (count == 1) {
        out.push_back(IsolatedRoot{sf, lo, hi});
        return;
    }
    Rational m = (lo + hi) / Rational(2);
    // bisection point must avoid roots
    int guard = 0;
    while (sign_at_rational(sf, m) == 0) {
        // m is itself a root: report exactly and split around it
        out.push_back(IsolatedRoot{sf, m, m});
        // find w with no further root in [m-w, m+w]
        Rational w = (hi - lo) / Rational(4);
        while (true) {
            Rational a = m - w, b = m + w;
            bool aok = sign_at_rational(sf, a) != 0;
            bool bok = sign_at_rational(sf, b) != 0;
            if (aok && bok && chain.count_roots(a, b) == 1) {
                isolate_rec(sf, chain, lo, a, chain.count_roots(lo, a), out);
                isolate_rec(sf, chain, b, hi, chain.count_roots(b, hi), out);
                return;
            }
            w = w / Rational(2);
            if (++guard > 4096) throw computation_error("root isolation failed to separate");
        }
    }
    int left = chain.count_roots(lo, m);
    isolate_rec(sf, chain, lo, m, left, out);
    isolate_rec(sf, chain, m, hi, count - left, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const QPoly& p) {
    if (p.is_zero()) throw invalid_input("cannot isolate roots of the zero polynomial");
    if (p.deg() == 0) return {};
    SturmChain chain(p);
    const QPoly& sf = chain.seq[0];
    Rational b = root_bound(sf);
    Rational lo = -b, hi = b;
    while (sign_at_rational(sf, lo) == 0) lo = lo - Rational(1);
    while (sign_at_rational(sf, hi) == 0) hi = hi + Rational(1);
    int count = chain.count_roots(lo, hi);
    std::vector<IsolatedRoot> out;
    isolate_rec(sf, chain, lo, hi, count, out);
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b2) { return a.lo < b2.lo; });
    // collapse rational roots to exact values
    for (auto& r : out) {
        if (r.is_rational()) continue;
        auto q = try_rational_root(sf, r.lo, r.hi, chain);
        if (q) {
            r.lo = r.hi = *q;
        } else {
            // make sure endpoints are not roots (they are not by construction:
            // bisection points with sign 0 were split off exactly)
        }
    }
    return out;
}

}  // namespace sextic

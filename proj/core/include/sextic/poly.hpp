// Dense recursive polynomial arithmetic over an exact commutative domain.
// The coefficient type is either Rational or another Poly, so towers like
// Q[t][x][y] are Poly<Poly<Poly<Rational>>>. The outermost level is always
// the variable that gets eliminated next.

#ifndef SEXTIC_POLY_HPP
#define SEXTIC_POLY_HPP

#include "sextic/rational.hpp"

#include <vector>

namespace sextic {

template <class C>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static bool is_one(const Rational& a) { return a == Rational(1); }
    static Rational neg(const Rational& a) { return -a; }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    // exact division; for the field case plain division
    static Rational divexact(const Rational& a, const Rational& b) { return a / b; }
    static Rational gcd(const Rational& a, const Rational& b) { return content_gcd(a, b); }
};

template <class C>
class Poly {
  public:
    using coeff_type = C;
    using traits = ring_traits<C>;

    Poly() = default;
    explicit Poly(std::vector<C> cs) : c_(std::move(cs)) { trim(); }
    static Poly constant(const C& c) {
        Poly p;
        if (!traits::is_zero(c)) p.c_.push_back(c);
        return p;
    }
    static Poly variable() {
        Poly p;
        p.c_.push_back(traits::zero());
        p.c_.push_back(traits::one());
        return p;
    }
    static Poly zero() { return Poly(); }
    static Poly one() { return constant(traits::one()); }

    // degree of the zero polynomial is -1
    int deg() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const C& lc() const {
        static const C z = traits::zero();
        return c_.empty() ? z : c_.back();
    }
    const C& coeff(int i) const {
        static const C z = traits::zero();
        return (i < 0 || i >= (int)c_.size()) ? z : c_[(size_t)i];
    }
    void set_coeff(int i, const C& v) {
        if (i >= (int)c_.size()) c_.resize((size_t)i + 1, traits::zero());
        c_[(size_t)i] = v;
        trim();
    }
    const std::vector<C>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = traits::neg(c);
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), traits::zero());
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r.c_[i] = traits::add(a.c_[i], b.c_[i]);
            else if (i < a.c_.size())
                r.c_[i] = a.c_[i];
            else
                r.c_[i] = b.c_[i];
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.resize(a.c_.size() + b.c_.size() - 1, traits::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (traits::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (traits::is_zero(b.c_[j])) continue;
                r.c_[i + j] = traits::add(r.c_[i + j], traits::mul(a.c_[i], b.c_[j]));
            }
        }
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(same(a.c_[i], b.c_[i]))) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const C& s) const {
        if (traits::is_zero(s)) return Poly();
        Poly r = *this;
        for (auto& c : r.c_) c = traits::mul(c, s);
        r.trim();
        return r;
    }
    Poly shifted_up(int k) const {  // * x^k
        if (is_zero()) return *this;
        Poly r;
        r.c_.resize(c_.size() + (size_t)k, traits::zero());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + (size_t)k] = c_[i];
        return r;
    }
    Poly derivative() const {
        Poly r;
        for (size_t i = 1; i < c_.size(); ++i)
            r.c_.push_back(traits::mul(c_[i], traits::from_int((long)i)));
        r.trim();
        return r;
    }
    C eval(const C& x) const {
        C r = traits::zero();
        for (size_t i = c_.size(); i-- > 0;) r = traits::add(traits::mul(r, x), c_[i]);
        return r;
    }
    // substitute a polynomial for the outer variable
    Poly compose(const Poly& q) const {
        Poly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * q + constant(c_[i]);
        return r;
    }

  private:
    static bool same(const Rational& a, const Rational& b) { return a == b; }
    template <class D>
    static bool same(const Poly<D>& a, const Poly<D>& b) { return a == b; }

    void trim() {
        while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<C> c_;
};

template <class C>
struct ring_traits<Poly<C>> {
    using P = Poly<C>;
    static P zero() { return P(); }
    static P one() { return P::one(); }
    static P from_int(long n) { return P::constant(ring_traits<C>::from_int(n)); }
    static bool is_zero(const P& a) { return a.is_zero(); }
    static bool is_one(const P& a) { return a.deg() == 0 && ring_traits<C>::is_one(a.lc()); }
    static P neg(const P& a) { return -a; }
    static P add(const P& a, const P& b) { return a + b; }
    static P sub(const P& a, const P& b) { return a - b; }
    static P mul(const P& a, const P& b) { return a * b; }
    static P divexact(const P& a, const P& b);
    static P gcd(const P& a, const P& b);
};

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  =  q*b + r, deg r < deg b
template <class C>
void pseudo_divrem(const Poly<C>& a, const Poly<C>& b, Poly<C>& q, Poly<C>& r) {
    using T = ring_traits<C>;
    if (b.is_zero()) throw invalid_input("pseudo-division by zero polynomial");
    q = Poly<C>();
    r = a;
    int db = b.deg();
    const C& lb = b.lc();
    int e = a.deg() - db + 1;
    if (e <= 0) return;
    while (!r.is_zero() && r.deg() >= db) {
        int k = r.deg() - db;
        C cr = r.lc();
        q = q.scaled(lb);
        q.set_coeff(k, T::add(q.coeff(k), cr));
        r = r.scaled(lb) - b.scaled(cr).shifted_up(k);
        --e;
    }
    // lc(b)^(deg a - deg b + 1) * a = q*b + r exactly
    C f = T::one();
    for (int i = 0; i < e; ++i) f = T::mul(f, lb);
    q = q.scaled(f);
    r = r.scaled(f);
}

template <class C>
Poly<C> prem(const Poly<C>& a, const Poly<C>& b) {
    Poly<C> q, r;
    pseudo_divrem(a, b, q, r);
    return r;
}

// exact polynomial division, throws if not divisible
template <class C>
Poly<C> ring_traits<Poly<C>>::divexact(const P& a, const P& b) {
    using T = ring_traits<C>;
    if (b.is_zero()) throw invalid_input("division by zero polynomial");
    if (a.is_zero()) return P();
    P r = a, q;
    int db = b.deg();
    while (!r.is_zero() && r.deg() >= db) {
        C c = T::divexact(r.lc(), b.lc());
        int k = r.deg() - db;
        q.set_coeff(k, c);
        r = r - b.scaled(c).shifted_up(k);
    }
    if (!r.is_zero()) throw computation_error("inexact polynomial division");
    return q;
}

template <class C>
C poly_content(const Poly<C>& a) {
    using T = ring_traits<C>;
    C g = T::zero();
    for (int i = 0; i <= a.deg(); ++i) {
        if (T::is_zero(a.coeff(i))) continue;
        g = T::gcd(g, a.coeff(i));
        if (T::is_one(g)) break;
    }
    return g;
}

template <class C>
Poly<C> primitive_part(const Poly<C>& a) {
    using T = ring_traits<C>;
    if (a.is_zero()) return a;
    C ct = poly_content(a);
    if (T::is_one(ct)) return a;
    Poly<C> r = a;
    std::vector<C> cs;
    for (int i = 0; i <= a.deg(); ++i) cs.push_back(T::divexact(a.coeff(i), ct));
    return Poly<C>(std::move(cs));
}

// gcd by primitive pseudo-remainder sequence
template <class C>
Poly<C> ring_traits<Poly<C>>::gcd(const P& a, const P& b) {
    using T = ring_traits<C>;
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    C cont = T::gcd(poly_content(a), poly_content(b));
    P f = primitive_part(a), g = primitive_part(b);
    if (f.deg() < g.deg()) std::swap(f, g);
    while (!g.is_zero()) {
        P r = prem(f, g);
        f = g;
        g = primitive_part(r);
    }
    P res = f.scaled(cont);
    return res;
}

// Resultant by the subresultant PRS (Cohen, "A Course in Computational
// Algebraic Number Theory", Alg. 3.3.7). Exact over any integral domain
// with exact division.
template <class C>
C poly_resultant(Poly<C> a, Poly<C> b) {
    using T = ring_traits<C>;
    if (a.is_zero() || b.is_zero()) return T::zero();
    bool negate = false;
    if (a.deg() < b.deg()) {
        if ((a.deg() & 1) && (b.deg() & 1)) negate = true;
        std::swap(a, b);
    }
    if (b.deg() == 0) {
        C r = T::one();
        for (int i = 0; i < a.deg(); ++i) r = T::mul(r, b.lc());
        return negate ? T::neg(r) : r;
    }
    int s = negate ? -1 : 1;
    C g = T::one(), h = T::one();
    while (true) {
        int da = a.deg(), db = b.deg();
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        Poly<C> r = prem(a, b);
        a = b;
        // divide r by g*h^delta
        C divisor = g;
        for (int i = 0; i < delta; ++i) divisor = T::mul(divisor, h);
        if (!r.is_zero()) {
            std::vector<C> cs;
            for (int i = 0; i <= r.deg(); ++i) cs.push_back(T::divexact(r.coeff(i), divisor));
            b = Poly<C>(std::move(cs));
        } else {
            b = Poly<C>();
        }
        g = a.lc();
        if (delta > 0) {
            // h = g^delta / h^(delta-1)
            C num = T::one();
            for (int i = 0; i < delta; ++i) num = T::mul(num, g);
            C den = T::one();
            for (int i = 0; i < delta - 1; ++i) den = T::mul(den, h);
            h = T::divexact(num, den);
        }
        if (b.is_zero()) return T::zero();
        if (b.deg() == 0) {
            int dA = a.deg();
            // resultant = lc(b)^dA / h^(dA-1), with the accumulated sign
            C num = T::one();
            for (int i = 0; i < dA; ++i) num = T::mul(num, b.lc());
            C den = T::one();
            for (int i = 0; i < dA - 1; ++i) den = T::mul(den, h);
            C res = T::divexact(num, den);
            return s < 0 ? T::neg(res) : res;
        }
    }
}

template <class C>
Poly<C> poly_gcd(const Poly<C>& a, const Poly<C>& b) {
    return ring_traits<Poly<C>>::gcd(a, b);
}
template <class C>
Poly<C> poly_divexact(const Poly<C>& a, const Poly<C>& b) {
    return ring_traits<Poly<C>>::divexact(a, b);
}

}  // namespace sextic

#endif

#include "sextic/rational.hpp"

namespace sextic {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw invalid_input("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal: shift the point away
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        mpz_class num;
        if (num.set_str(digits, 10) != 0) throw invalid_input("bad rational literal: " + s);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw invalid_input("bad rational literal: " + s);
    if (q.get_den() == 0) throw invalid_input("rational with zero denominator: " + s);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
    // fold limbs of numerator and denominator
    auto fold = [](const mpz_class& z, std::size_t h) {
        std::size_t n = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i)
            h = h * 1099511628211ULL ^ mpz_getlimbn(z.get_mpz_t(), i);
        if (sgn(z) < 0) h = ~h;
        return h;
    };
    return fold(v_.get_den(), fold(v_.get_num(), 14695981039346656037ULL));
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Rational content_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class g = gcd_z(a.num(), b.num());
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(mpq_class(g, l));
}

}  // namespace sextic

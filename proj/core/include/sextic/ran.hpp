// Real algebraic numbers: a squarefree integer defining polynomial plus an
// isolating interval. The enclosure may be tightened through const methods
// (the represented number never changes).

#ifndef SEXTIC_RAN_HPP
#define SEXTIC_RAN_HPP

#include "sextic/unipoly.hpp"

#include <string>
#include <vector>

namespace sextic {

class Ran {
  public:
    Ran() : defining_(QPoly({Rational(0), Rational(1)})), lo_(0), hi_(0) {}
    static Ran of_rational(const Rational& r);
    static Ran from_isolated(const IsolatedRoot& ir);

    bool is_rational() const { return lo_ == hi_; }
    const Rational& rational_value() const;
    const QPoly& defining() const { return defining_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    QInterval box() const { return {lo_, hi_}; }

    // one bisection step against the defining polynomial
    void refine() const;
    void refine_below(const Rational& width) const;

    int sign() const;
    double approx() const;
    // decimal with certified |error| <= 10^-digits
    std::string decimal(int digits) const;

  private:
    QPoly defining_;           // squarefree, integer-primitive, lc > 0
    mutable Rational lo_, hi_; // endpoints are never roots unless lo_ == hi_
};

// exact sign of p at a; gcd test first, then interval refinement
int sign_at(const QPoly& p, const Ran& a);

// -1, 0, +1 for a <=> b; equality resolved exactly via gcd of definings
int ran_compare(const Ran& a, const Ran& b);
int ran_compare_rat(const Ran& a, const Rational& r);
inline bool ran_eq(const Ran& a, const Ran& b) { return ran_compare(a, b) == 0; }

Ran ran_neg(const Ran& a);
// value p(a)
Ran ran_of_polynomial(const Ran& a, const QPoly& p);
// value num(a)/den(a); requires den(a) != 0
Ran ran_of_rational_function(const Ran& a, const QPoly& num, const QPoly& den);
// value P(a, b) where P is a polynomial in (inner = a's variable, outer = b's)
Ran ran_of_bivariate(const Ran& a, const Ran& b, const BiPoly& P);
int sign_of_bivariate(const Ran& a, const Ran& b, const BiPoly& P);

Ran ran_add(const Ran& a, const Ran& b);
Ran ran_mul(const Ran& a, const Ran& b);

// all real roots of p as Ran values, ascending
std::vector<Ran> real_roots_of(const QPoly& p);

}  // namespace sextic

#endif

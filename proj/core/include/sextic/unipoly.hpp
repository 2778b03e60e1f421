// Univariate utilities on Poly<Rational>: Sturm sequences, real-root
// isolation, squarefree parts, rational-root recovery.

#ifndef SEXTIC_UNIPOLY_HPP
#define SEXTIC_UNIPOLY_HPP

#include "sextic/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sextic {

using QPoly = Poly<Rational>;
using BiPoly = Poly<QPoly>;      // outer variable y, coefficients in Q[x]
using TriPoly = Poly<BiPoly>;    // outer variable to eliminate first

QPoly qpoly_from(std::initializer_list<long> ascending);
QPoly qpoly_from_rationals(std::vector<Rational> ascending);
std::string qpoly_str(const QPoly& p, const std::string& var = "x");

// scale so all coefficients are coprime integers with positive leading one
QPoly integer_primitive(const QPoly& p);
QPoly squarefree_part(const QPoly& p);

Rational eval_at(const QPoly& p, const Rational& x);
int sign_at_rational(const QPoly& p, const Rational& x);

// closed interval with rational endpoints
struct QInterval {
    Rational lo, hi;
    QInterval() = default;
    QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    static QInterval point(const Rational& r) { return {r, r}; }
    Rational width() const { return hi - lo; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    Rational mid() const { return (lo + hi) / Rational(2); }
};
QInterval iv_add(const QInterval& a, const QInterval& b);
QInterval iv_sub(const QInterval& a, const QInterval& b);
QInterval iv_mul(const QInterval& a, const QInterval& b);
QInterval iv_pow(const QInterval& a, unsigned e);
QInterval iv_eval(const QPoly& p, const QInterval& x);

// Sturm chain of the squarefree part; shared by isolation and counting
struct SturmChain {
    std::vector<QPoly> seq;  // seq[0] squarefree, integer-primitive
    explicit SturmChain(const QPoly& p);
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    // number of distinct real roots in (a, b]; a, b must not be roots of seq[0]
    int count_roots(const Rational& a, const Rational& b) const;
    int count_all_roots() const;
};

// Cauchy bound: all real roots lie in (-B, B)
Rational root_bound(const QPoly& p);

// smallest-denominator rational in [lo, hi] (Stern-Brocot walk)
Rational simplest_in_interval(const Rational& lo, const Rational& hi);

struct IsolatedRoot {
    QPoly defining;            // squarefree, integer-primitive, positive lc
    Rational lo, hi;           // lo == hi iff the root is rational
    bool is_rational() const { return lo == hi; }
};

// all distinct real roots, ascending; rational roots are returned exactly
std::vector<IsolatedRoot> isolate_real_roots(const QPoly& p);

}  // namespace sextic

#endif

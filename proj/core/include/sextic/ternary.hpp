// Homogeneous forms in x0, x1, x2 with rational coefficients, projective
// points, and coordinate changes.

#ifndef SEXTIC_TERNARY_HPP
#define SEXTIC_TERNARY_HPP

#include "sextic/ran.hpp"

#include <array>
#include <map>
#include <string>

namespace sextic {

struct ExpTriple {
    int e[3];
    int degree() const { return e[0] + e[1] + e[2]; }
    // descending lex with x0 > x1 > x2; map iteration starts at the
    // lexicographically first monomial
    bool operator<(const ExpTriple& o) const {
        if (e[0] != o.e[0]) return e[0] > o.e[0];
        if (e[1] != o.e[1]) return e[1] > o.e[1];
        return e[2] > o.e[2];
    }
    bool operator==(const ExpTriple& o) const {
        return e[0] == o.e[0] && e[1] == o.e[1] && e[2] == o.e[2];
    }
};

class TernaryForm {
  public:
    TernaryForm() = default;
    explicit TernaryForm(int degree) : degree_(degree) {}
    static TernaryForm monomial(int i, int j, int k, const Rational& c);
    static TernaryForm variable(int i) {
        int e[3] = {0, 0, 0};
        e[i] = 1;
        return monomial(e[0], e[1], e[2], Rational(1));
    }
    static TernaryForm constant(const Rational& c) { return monomial(0, 0, 0, c); }
    static TernaryForm linear(const Rational& a, const Rational& b, const Rational& c);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpTriple, Rational>& terms() const { return terms_; }
    Rational coeff(int i, int j, int k) const;
    void add_term(int i, int j, int k, const Rational& c);

    TernaryForm operator-() const;
    friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
    friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
        return a.terms_ == b.terms_;
    }
    TernaryForm scaled(const Rational& s) const;
    TernaryForm pow(unsigned e) const;

    TernaryForm partial(int var) const;
    Rational evaluate(const Rational& x0, const Rational& x1, const Rational& x2) const;

    std::string str() const;  // "c x0^i x1^j x2^k + ..."
    static TernaryForm parse(const std::string& text);

  private:
    int degree_ = 0;
    std::map<ExpTriple, Rational> terms_;
};

struct ProjectivePoint {
    std::array<Rational, 3> c;
    ProjectivePoint() : c{Rational(0), Rational(0), Rational(1)} {}
    ProjectivePoint(Rational a, Rational b, Rational d);  // normalizes
    bool operator==(const ProjectivePoint& o) const { return c == o.c; }
    bool operator<(const ProjectivePoint& o) const;
    std::string str() const;
};

// point with coordinates in Q(alpha); coordinate i is poly[i](alpha)
struct AlgebraicPoint {
    Ran alpha;
    std::array<QPoly, 3> c;
    bool is_rational() const;
    ProjectivePoint to_rational() const;  // requires is_rational()
    std::array<Ran, 3> coords() const;
    std::string str() const;
};

struct Mat3 {
    Rational m[3][3];
    static Mat3 identity();
    Rational det() const;
    Mat3 mul(const Mat3& o) const;
    Mat3 inverse() const;
    ProjectivePoint apply(const ProjectivePoint& p) const;
};

std::array<TernaryForm, 3> partials(const TernaryForm& f);
TernaryForm jacobian_det(const TernaryForm& f, const TernaryForm& g, const TernaryForm& h);
// f(T x); degree preserved, composition law (f.T).T' = f.(T T')
TernaryForm apply_projectivity(const TernaryForm& f, const Mat3& T);

int evaluate_sign(const TernaryForm& f, const ProjectivePoint& p);
int evaluate_sign(const TernaryForm& f, const AlgebraicPoint& p);
bool vanishes_at(const TernaryForm& f, const ProjectivePoint& p);
bool vanishes_at(const TernaryForm& f, const AlgebraicPoint& p);

// clear denominators, divide by integer content, make the lexicographically
// first coefficient positive
TernaryForm canonical_normalize(const TernaryForm& f);
// true if a and b agree up to a nonzero scalar; positive_only restricts to
// positive factors
bool proportional(const TernaryForm& a, const TernaryForm& b, bool positive_only = false);

TernaryForm form_gcd(const TernaryForm& f, const TernaryForm& g);
bool form_divides(const TernaryForm& d, const TernaryForm& f);
TernaryForm form_divexact(const TernaryForm& f, const TernaryForm& d);

// chart var = 1; the remaining variables in increasing index order become
// (inner, outer) of the BiPoly
BiPoly dehomogenize(const TernaryForm& f, int chart_var);
// inverse of dehomogenize for chart x2 = 1 up to a power of x2:
// homogenizes to the given total degree
TernaryForm homogenize(const BiPoly& p, int degree, int chart_var);

// restriction to the line x_k = 0 as a univariate polynomial in t, where the
// point is (t : 1) in the two remaining coordinates (increasing index order)
QPoly line_restriction(const TernaryForm& f, int k);

}  // namespace sextic

#endif

// Zero-dimensional bivariate systems over Q: triangular decomposition via
// resultants and Euclidean gcds in Q[x]/(D), with lazy splitting of
// reducible moduli (dynamic evaluation).

#ifndef SEXTIC_BIVAR_HPP
#define SEXTIC_BIVAR_HPP

#include "sextic/ran.hpp"

#include <vector>

namespace sextic {

// thrown inside residue arithmetic when the modulus factors
struct SplitNeeded {
    QPoly factor;  // proper factor of the modulus
};

// arithmetic in Q[x]/(D), D squarefree; inversion may discover a factor
class ResidueCtx {
  public:
    explicit ResidueCtx(QPoly D);
    const QPoly& modulus() const { return d_; }
    QPoly reduce(const QPoly& a) const;
    QPoly mul(const QPoly& a, const QPoly& b) const { return reduce(a * b); }
    QPoly inv(const QPoly& a) const;  // throws SplitNeeded on zero divisors

  private:
    QPoly d_;
};

// y-polynomial with coefficients in Q[x]/(D)
using ResPoly = std::vector<QPoly>;  // ascending in y, reduced coefficients

struct TriBundle {
    QPoly dx;    // squarefree factor of the x-eliminant
    QPoly yval;  // the unique y over each root: y = yval(x) mod dx
};

struct TriangularResult {
    bool needs_shear = false;  // two distinct y over one x somewhere
    std::vector<TriBundle> bundles;
};

// distinct solutions of u = v = 0 grouped by the x-eliminant factors.
// requires gcd(u, v) = 1 and constant nonzero leading y-coefficients.
TriangularResult triangular_decompose(const BiPoly& u, const BiPoly& v);

struct RealFiberPoint {
    Ran x;
    QPoly yval;  // y coordinate equals yval evaluated at x
    Ran y() const { return ran_of_polynomial(x, yval); }
};

std::vector<RealFiberPoint> real_fiber_points(const TriangularResult& tri);

// sign of g at a fiber point, exactly
int sign_at_fiber(const BiPoly& g, const RealFiberPoint& p);

// BiPoly helpers
BiPoly bipoly_shear(const BiPoly& p, const Rational& lambda);  // x -> x + lambda y
QPoly bipoly_at_x(const BiPoly& p, const Rational& x0);        // univariate in y
QPoly bipoly_substitute_y(const BiPoly& p, const QPoly& w);    // p(x, w(x))
Rational bipoly_eval(const BiPoly& p, const Rational& x0, const Rational& y0);
QPoly resultant_y(const BiPoly& u, const BiPoly& v);
BiPoly bipoly_derivative_x(const BiPoly& p);
bool y_regular(const BiPoly& p);
int bipoly_total_deg(const BiPoly& p);

}  // namespace sextic

#endif

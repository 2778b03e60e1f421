// Built-in example configurations: point sets with their cubics and the
// sextics they determine. Example 1 lives on an elliptic curve; its point
// coordinates were generated with the chord-tangent script in
// tools/point_gen.py and are checked against the curve in the tests.

#ifndef SEXTIC_FIXTURES_HPP
#define SEXTIC_FIXTURES_HPP

#include "sextic/ternary.hpp"

#include <vector>

namespace sextic::fixtures {

// example 5.1: nine points on the elliptic curve y^2 = x^3 + x^2 + 4
std::vector<ProjectivePoint> s51();
TernaryForm f51();  // y^2 z - x^3 - x^2 z - 4 z^3
TernaryForm q51();  // product of four lines and a conic through the points

// example 5.2: nine points on the coordinate triangle
std::vector<ProjectivePoint> s52();
TernaryForm f52();  // x0 x1 x2
TernaryForm q52();  // quartic times a double line

// example 5.3: admissible set whose extreme sextic has only nine real zeros
std::vector<ProjectivePoint> s53();
TernaryForm f53();
TernaryForm q53_extreme();  // 2496 l1 l2 l3 l4 l^2 + (888 f + 273 xyz)^2

// example 5.4: the eight-point configuration with pencil x^3-xz^2, y^3-yz^2
std::vector<ProjectivePoint> t54();
TernaryForm f54();        // x^3 - x z^2
TernaryForm f54_prime();  // y^3 - y z^2
TernaryForm robinson();   // the symmetric sextic through the ten points
TernaryForm nonic54();    // z (z^2-x^2)(z^2-y^2)(x^2+xy+y^2-z^2)(x^2-xy+y^2-z^2)
ProjectivePoint p54(const Rational& u);             // (1 : u : 0)
std::vector<ProjectivePoint> s54(const Rational& u);
TernaryForm x54(const Rational& u);  // u^3 f - f'
TernaryForm q54(const Rational& u);  // displayed extreme sextic of s54(u)

// example 5.5: the symmetric family
std::vector<ProjectivePoint> s55(const Rational& u);
TernaryForm f55(const Rational& u);
TernaryForm q55(const Rational& u);

// ten-point sets
std::vector<ProjectivePoint> robinson_points();

}  // namespace sextic::fixtures

#endif

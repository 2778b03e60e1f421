// Linear systems of forms with prescribed multiplicities at points:
// kernels of the constraint matrices, computed fraction-free.

#ifndef SEXTIC_LINSYS_HPP
#define SEXTIC_LINSYS_HPP

#include "sextic/ternary.hpp"

#include <optional>
#include <vector>

namespace sextic {

struct PointConstraint {
    ProjectivePoint point;
    int multiplicity;  // 1 or 2
};

struct LinearSystemBasis {
    int degree = 0;
    std::vector<PointConstraint> constraints;
    std::vector<TernaryForm> basis;  // deterministic reduced-echelon form
    int dimension = 0;
    int rank = 0;       // of the constraint matrix
    int monomials = 0;  // number of degree-d monomials
};

// forms of degree d with multiplicity >= m at each constraint point;
// multiplicity 2 is imposed through all three partial derivatives
LinearSystemBasis linear_system(int d, const std::vector<PointConstraint>& constraints);

// all degree-d monomial exponents in the canonical (descending lex) order
std::vector<ExpTriple> monomial_basis(int d);
std::vector<Rational> form_to_vector(const TernaryForm& f, int d);
TernaryForm vector_to_form(const std::vector<Rational>& v, int d);

// reduced row echelon span of a list of forms
struct FormSpan {
    int degree = 0;
    std::vector<TernaryForm> basis;
    std::vector<std::vector<Rational>> rref;  // rows of the reduced span
    std::vector<int> pivots;
    bool contains(const TernaryForm& f) const;
    // coordinates of f in terms of the rref rows, if representable
    std::optional<std::vector<Rational>> coordinates(const TernaryForm& f) const;
};
FormSpan make_span(int degree, const std::vector<TernaryForm>& forms);

struct PencilGenerator {
    enum class Status { ok, dimension_not_two, generator_shares_factor } status;
    TernaryForm q;  // canonical representative with zero component along f^2
    int dimension = 0;
};
// second generator of I_6(2S) next to f^2, reduced mod f^2 and canonically
// scaled; gcd(f, q) = 1 on success
PencilGenerator pencil_second_generator(const std::vector<ProjectivePoint>& S,
                                        const TernaryForm& f);

}  // namespace sextic

#endif

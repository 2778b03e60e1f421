#include "sextic/linsys.hpp"

#include <set>

namespace sextic {

std::vector<ExpTriple> monomial_basis(int d) {
    std::vector<ExpTriple> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back(ExpTriple{{i, j, d - i - j}});
    return out;
}

std::vector<Rational> form_to_vector(const TernaryForm& f, int d) {
    auto mons = monomial_basis(d);
    std::vector<Rational> v(mons.size(), Rational(0));
    for (auto& [e, c] : f.terms()) {
        bool placed = false;
        for (size_t k = 0; k < mons.size(); ++k)
            if (mons[k] == e) {
                v[k] = c;
                placed = true;
                break;
            }
        if (!placed) throw invalid_input("form degree does not match vector space");
    }
    return v;
}

TernaryForm vector_to_form(const std::vector<Rational>& v, int d) {
    auto mons = monomial_basis(d);
    if (v.size() != mons.size()) throw invalid_input("coefficient vector has wrong length");
    TernaryForm f(d);
    for (size_t k = 0; k < mons.size(); ++k)
        if (!v[k].is_zero()) f.add_term(mons[k].e[0], mons[k].e[1], mons[k].e[2], v[k]);
    return f;
}

namespace {

// fraction-free forward elimination (Bareiss), then rational back-substitution
// to reduced echelon form; returns pivot columns
std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    // clear denominators per row
    for (auto& row : m) {
        Rational ct(0);
        for (auto& x : row) ct = content_gcd(ct, x);
        if (ct.is_zero()) continue;
        for (auto& x : row) x /= ct;
    }
    Rational prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            m[i][c] = Rational(0);
        }
        prev = m[r][c];
        pivots.push_back((int)c);
        ++r;
    }
    // normalize pivot rows and eliminate upwards
    for (size_t k = pivots.size(); k-- > 0;) {
        size_t row = k;
        int pc = pivots[k];
        Rational lead = m[row][(size_t)pc];
        for (size_t j = (size_t)pc; j < cols; ++j) m[row][j] /= lead;
        for (size_t i = 0; i < row; ++i) {
            Rational f = m[i][(size_t)pc];
            if (f.is_zero()) continue;
            for (size_t j = (size_t)pc; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
    }
    m.resize(pivots.size());
    return pivots;
}

std::vector<std::vector<Rational>> kernel_from_rref(const std::vector<std::vector<Rational>>& m,
                                                    const std::vector<int>& pivots, size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[(size_t)p] = true;
    std::vector<std::vector<Rational>> kernel;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[(size_t)pivots[k]] = -m[k][f];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

LinearSystemBasis linear_system(int d, const std::vector<PointConstraint>& constraints) {
    if (d < 1) throw invalid_input("degree must be at least 1");
    std::set<ProjectivePoint> seen;
    for (auto& pc : constraints) {
        if (pc.multiplicity != 1 && pc.multiplicity != 2)
            throw invalid_input("multiplicities must be 1 or 2");
        if (!seen.insert(pc.point).second) throw invalid_input("duplicate constraint point");
    }
    auto mons = monomial_basis(d);
    std::vector<std::vector<Rational>> rows;
    for (auto& pc : constraints) {
        const auto& P = pc.point;
        if (pc.multiplicity == 1) {
            std::vector<Rational> row;
            row.reserve(mons.size());
            for (auto& e : mons)
                row.push_back(P.c[0].pow((unsigned)e.e[0]) * P.c[1].pow((unsigned)e.e[1]) *
                              P.c[2].pow((unsigned)e.e[2]));
            rows.push_back(std::move(row));
        } else {
            for (int v = 0; v < 3; ++v) {
                std::vector<Rational> row;
                row.reserve(mons.size());
                for (auto& e : mons) {
                    if (e.e[v] == 0) {
                        row.push_back(Rational(0));
                        continue;
                    }
                    int ne[3] = {e.e[0], e.e[1], e.e[2]};
                    ne[v] -= 1;
                    Rational val = Rational(e.e[v]) * P.c[0].pow((unsigned)ne[0]) *
                                   P.c[1].pow((unsigned)ne[1]) * P.c[2].pow((unsigned)ne[2]);
                    row.push_back(val);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    LinearSystemBasis out;
    out.degree = d;
    out.constraints = constraints;
    out.monomials = (int)mons.size();
    if (rows.empty()) {
        for (auto& e : mons)
            out.basis.push_back(TernaryForm::monomial(e.e[0], e.e[1], e.e[2], Rational(1)));
        out.dimension = (int)mons.size();
        out.rank = 0;
        return out;
    }
    auto pivots = rref(rows);
    out.rank = (int)pivots.size();
    auto kernel = kernel_from_rref(rows, pivots, mons.size());
    for (auto& v : kernel) out.basis.push_back(canonical_normalize(vector_to_form(v, d)));
    out.dimension = (int)kernel.size();
    return out;
}

bool FormSpan::contains(const TernaryForm& f) const { return coordinates(f).has_value(); }

std::optional<std::vector<Rational>> FormSpan::coordinates(const TernaryForm& f) const {
    std::vector<Rational> v = form_to_vector(f, degree);
    std::vector<Rational> coords;
    for (size_t k = 0; k < rref.size(); ++k) {
        Rational c = v[(size_t)pivots[k]];
        coords.push_back(c);
        if (c.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rref[k][j];
    }
    for (auto& x : v)
        if (!x.is_zero()) return std::nullopt;
    return coords;
}

FormSpan make_span(int degree, const std::vector<TernaryForm>& forms) {
    FormSpan s;
    s.degree = degree;
    s.basis = forms;
    std::vector<std::vector<Rational>> m;
    for (auto& f : forms) m.push_back(form_to_vector(f, degree));
    s.pivots = rref(m);
    s.rref = std::move(m);
    return s;
}

PencilGenerator pencil_second_generator(const std::vector<ProjectivePoint>& S,
                                        const TernaryForm& f) {
    std::vector<PointConstraint> cs;
    for (auto& p : S) cs.push_back({p, 2});
    LinearSystemBasis L = linear_system(6, cs);
    PencilGenerator out;
    out.dimension = L.dimension;
    if (L.dimension != 2) {
        out.status = PencilGenerator::Status::dimension_not_two;
        return out;
    }
    TernaryForm f2 = f * f;
    std::vector<Rational> vf = form_to_vector(f2, 6);
    size_t cf = 0;
    while (cf < vf.size() && vf[cf].is_zero()) ++cf;
    if (cf == vf.size()) throw computation_error("zero cubic in pencil construction");
    // representative of the pencil with zero coefficient on f^2's leading slot
    TernaryForm q;
    for (auto& b : L.basis) {
        std::vector<Rational> vb = form_to_vector(b, 6);
        TernaryForm cand = b - f2.scaled(vb[cf] / vf[cf]);
        if (!cand.is_zero()) {
            q = canonical_normalize(cand);
            break;
        }
    }
    if (q.is_zero()) throw computation_error("pencil reduction produced no generator");
    TernaryForm g = form_gcd(f, q);
    if (g.degree() > 0) {
        out.status = PencilGenerator::Status::generator_shares_factor;
        out.q = q;
        return out;
    }
    out.status = PencilGenerator::Status::ok;
    out.q = q;
    return out;
}

}  // namespace sextic

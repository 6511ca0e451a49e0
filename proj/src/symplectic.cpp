#include "bilag/symplectic.hpp"
#include <stdexcept>

namespace bilag {

SymplecticVerdict is_symplectic(const LieAlgebra& g, const KForm& w) {
    if (w.degree != 2) throw std::invalid_argument("is_symplectic: need a 2-form");
    if (!ce_differential(g, w).is_zero()) return SymplecticVerdict::notClosed;
    if (determinant(gram_matrix(w, g.dim)) == 0) return SymplecticVerdict::degenerate;
    return SymplecticVerdict::yes;
}

SymplecticForm make_symplectic(const LieAlgebra& g, const KForm& w) {
    const SymplecticVerdict v = is_symplectic(g, w);
    if (v == SymplecticVerdict::notClosed)
        throw std::invalid_argument("make_symplectic: form is not closed");
    if (v == SymplecticVerdict::degenerate)
        throw std::invalid_argument("make_symplectic: form is degenerate");
    return SymplecticForm{w, gram_matrix(w, g.dim)};
}

static bool lagrangian_impl(const Matrix& gram, const Subspace& s) {
    const std::size_t n = gram.rows;
    if (2 * s.dimension != n) return false;
    for (std::size_t a = 0; a < s.basis.size(); ++a)
        for (std::size_t b = a + 1; b < s.basis.size(); ++b) {
            Rational v = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (s.basis[a][i] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (gram.at(i, j) != 0 && s.basis[b][j] != 0)
                        v += s.basis[a][i] * gram.at(i, j) * s.basis[b][j];
            }
            if (v != 0) return false;
        }
    return true;
}

bool is_lagrangian(const SymplecticForm& w, const Subspace& s) {
    return lagrangian_impl(w.gram, s);
}

bool is_lagrangian(const KForm& w, const Subspace& s) {
    if (w.degree != 2) throw std::invalid_argument("is_lagrangian: need a 2-form");
    return lagrangian_impl(gram_matrix(w, s.ambient->dim), s);
}

BiLagrangianReport verify_bilagrangian(const LieAlgebra& g, const KForm& w,
                                       const Subspace& f, const Subspace& g2) {
    BiLagrangianReport rep;
    const SymplecticVerdict v = is_symplectic(g, w);
    rep.closed = (v != SymplecticVerdict::notClosed);
    rep.nonDegenerate = (v != SymplecticVerdict::degenerate);
    rep.fSubalgebra = is_subalgebra(f);
    rep.g2Subalgebra = is_subalgebra(g2);
    const Matrix gram = gram_matrix(w, g.dim);
    rep.fLagrangian = lagrangian_impl(gram, f);
    rep.g2Lagrangian = lagrangian_impl(gram, g2);
    rep.complementary = is_complementary(f, g2);
    return rep;
}

BiLagrangianStructure make_bilagrangian(const LieAlgebra& g, const KForm& w,
                                        const Subspace& f, const Subspace& g2) {
    const BiLagrangianReport rep = verify_bilagrangian(g, w, f, g2);
    if (!rep.pass())
        throw std::invalid_argument("make_bilagrangian: verification failed");
    return BiLagrangianStructure{&g, make_symplectic(g, w), f, g2};
}

std::pair<Matrix, Matrix> splitting_projections(const BiLagrangianStructure& b) {
    const std::size_t n = b.algebra->dim;
    // columns of C: F basis then G basis; in that basis P_F = diag(1..1,0..0)
    Matrix c(n, n);
    for (std::size_t j = 0; j < b.f.dimension; ++j)
        for (std::size_t i = 0; i < n; ++i) c.at(i, j) = b.f.basis[j][i];
    for (std::size_t j = 0; j < b.g2.dimension; ++j)
        for (std::size_t i = 0; i < n; ++i) c.at(i, b.f.dimension + j) = b.g2.basis[j][i];
    const auto cinv = inverse(c);
    if (!cinv) throw std::invalid_argument("splitting_projections: F+G is not a splitting");
    Matrix df(n, n), dg(n, n);
    for (std::size_t j = 0; j < b.f.dimension; ++j) df.at(j, j) = 1;
    for (std::size_t j = b.f.dimension; j < n; ++j) dg.at(j, j) = 1;
    return {multiply(multiply(c, df), *cinv), multiply(multiply(c, dg), *cinv)};
}

ParaKaehlerPair para_kaehler(const BiLagrangianStructure& b) {
    const auto [pf, pg] = splitting_projections(b);
    const std::size_t n = b.algebra->dim;
    Matrix iOp(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) iOp.at(i, j) = pf.at(i, j) - pg.at(i, j);
    // g(x,y) = w(I x, y): metric = I^T * gram
    const Matrix metric = multiply(transpose(iOp), b.omega.gram);
    return ParaKaehlerPair{iOp, metric};
}

} // namespace bilag

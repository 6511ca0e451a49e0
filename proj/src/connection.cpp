#include "bilag/connection.hpp"
#include <stdexcept>

namespace bilag {

bool CurvatureTensor::is_zero() const {
    for (const auto& v : r)
        if (v != 0) return false;
    return true;
}

namespace {

Vector mat_vec(const Matrix& m, const Vector& v) {
    Vector r(m.rows, Rational(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

// change-of-basis matrix whose columns are the given basis vectors
Matrix basis_columns(const std::vector<Vector>& basis) {
    const std::size_t n = basis.size();
    Matrix c(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) c.at(i, j) = basis[j][i];
    return c;
}

Vector solve_D_impl(const BiLagrangianStructure& b, const Matrix& gramT,
                    const Vector& x, const Vector& y) {
    const LieAlgebra& g = *b.algebra;
    const std::size_t n = g.dim;
    // w(D, e_k) = -w(y, [x, e_k])  for k = 1..n
    Vector rhs(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k)
        rhs[k] = -evaluate2(b.omega.underlying, y, bracket(g, x, basis_vector(n, k)));
    const auto d = solve(gramT, rhs);
    if (!d) throw std::invalid_argument("solve_D: degenerate form");
    return *d;
}

} // namespace

Vector solve_D(const BiLagrangianStructure& b, const Vector& x, const Vector& y) {
    return solve_D_impl(b, transpose(b.omega.gram), x, y);
}

Vector canonical_nabla(const BiLagrangianStructure& b, const Vector& x, const Vector& y) {
    const auto [pf, pg] = splitting_projections(b);
    const Matrix gramT = transpose(b.omega.gram);
    const LieAlgebra& g = *b.algebra;
    const Vector xf = mat_vec(pf, x), xg = mat_vec(pg, x);
    const Vector yf = mat_vec(pf, y), yg = mat_vec(pg, y);
    Vector r = mat_vec(pf, solve_D_impl(b, gramT, xf, yf));
    r = add(r, mat_vec(pf, bracket(g, xg, yf)));
    r = add(r, mat_vec(pg, solve_D_impl(b, gramT, xg, yg)));
    r = add(r, mat_vec(pg, bracket(g, xf, yg)));
    return r;
}

ConnectionTable canonical_connection_on(const BiLagrangianStructure& b,
                                        const std::vector<Vector>& basis) {
    const LieAlgebra& g = *b.algebra;
    const std::size_t n = g.dim;
    if (basis.size() != n) throw std::invalid_argument("canonical_connection_on: need a full basis");
    const auto cinv = inverse(basis_columns(basis));
    if (!cinv) throw std::invalid_argument("canonical_connection_on: vectors do not form a basis");
    const auto [pf, pg] = splitting_projections(b);
    const Matrix gramT = transpose(b.omega.gram);
    ConnectionTable ct;
    ct.basis = basis;
    ct.n = n;
    ct.gamma.assign(n * n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector xf = mat_vec(pf, basis[i]), xg = mat_vec(pg, basis[i]);
            const Vector yf = mat_vec(pf, basis[j]), yg = mat_vec(pg, basis[j]);
            Vector v = mat_vec(pf, solve_D_impl(b, gramT, xf, yf));
            v = add(v, mat_vec(pf, bracket(g, xg, yf)));
            v = add(v, mat_vec(pg, solve_D_impl(b, gramT, xg, yg)));
            v = add(v, mat_vec(pg, bracket(g, xf, yg)));
            const Vector coeffs = mat_vec(*cinv, v);
            for (std::size_t k = 0; k < n; ++k) ct.g(k, i, j) = coeffs[k];
        }
    return ct;
}

ConnectionTable canonical_connection(const BiLagrangianStructure& b) {
    std::vector<Vector> basis = b.f.basis;
    basis.insert(basis.end(), b.g2.basis.begin(), b.g2.basis.end());
    return canonical_connection_on(b, basis);
}

std::vector<Rational> torsion(const LieAlgebra& g, const ConnectionTable& ct) {
    const std::size_t n = ct.n;
    const auto cinv = inverse(basis_columns(ct.basis));
    if (!cinv) throw std::invalid_argument("torsion: table basis is singular");
    std::vector<Rational> t(n * n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector br = mat_vec(*cinv, bracket(g, ct.basis[i], ct.basis[j]));
            for (std::size_t k = 0; k < n; ++k)
                t[(k * n + i) * n + j] = ct.g(k, i, j) - ct.g(k, j, i) - br[k];
        }
    return t;
}

std::vector<Rational> nabla_omega(const ConnectionTable& ct, const SymplecticForm& w) {
    const std::size_t n = ct.n;
    // nabla_i b_j in e-coordinates
    std::vector<std::vector<Vector>> nb(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v(ct.basis[0].size(), Rational(0));
            for (std::size_t k = 0; k < n; ++k)
                if (ct.g(k, i, j) != 0) v = add(v, scale(ct.g(k, i, j), ct.basis[k]));
            nb[i][j] = std::move(v);
        }
    std::vector<Rational> out(n * n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out[(i * n + j) * n + k] =
                    -evaluate2(w.underlying, nb[i][j], ct.basis[k]) -
                    evaluate2(w.underlying, ct.basis[j], nb[i][k]);
    return out;
}

CurvatureTensor curvature(const LieAlgebra& g, const ConnectionTable& ct) {
    const std::size_t n = ct.n;
    const auto cinv = inverse(basis_columns(ct.basis));
    if (!cinv) throw std::invalid_argument("curvature: table basis is singular");
    CurvatureTensor r;
    r.n = n;
    r.r.assign(n * n * n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // [b_i, b_j] in table coordinates
            const Vector u = mat_vec(*cinv, bracket(g, ct.basis[i], ct.basis[j]));
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational v = 0;
                    for (std::size_t m = 0; m < n; ++m) {
                        if (ct.g(m, j, k) != 0) v += ct.g(m, j, k) * ct.g(l, i, m);
                        if (ct.g(m, i, k) != 0) v -= ct.g(m, i, k) * ct.g(l, j, m);
                    }
                    for (std::size_t p = 0; p < n; ++p)
                        if (u[p] != 0) v -= u[p] * ct.g(l, p, k);
                    r.at(l, i, j, k) = std::move(v);
                }
        }
    return r;
}

CurvatureIdentities curvature_identities(const ConnectionTable& ct,
                                         const CurvatureTensor& ctensor,
                                         const BiLagrangianStructure& b) {
    const std::size_t n = ct.n;
    const std::size_t half = b.f.dimension;
    CurvatureIdentities id;
    id.bianchi = true;
    for (std::size_t i = 0; i < n && id.bianchi; ++i)
        for (std::size_t j = 0; j < n && id.bianchi; ++j)
            for (std::size_t k = 0; k < n && id.bianchi; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (ctensor.at(l, i, j, k) + ctensor.at(l, j, k, i) +
                            ctensor.at(l, k, i, j) != 0) {
                        id.bianchi = false;
                        break;
                    }
    auto same_side = [half](std::size_t a, std::size_t c) {
        return (a < half) == (c < half);
    };
    id.leafwiseFlat = true;
    for (std::size_t i = 0; i < n && id.leafwiseFlat; ++i)
        for (std::size_t j = 0; j < n && id.leafwiseFlat; ++j) {
            if (!same_side(i, j)) continue;
            for (std::size_t k = 0; k < n && id.leafwiseFlat; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (ctensor.at(l, i, j, k) != 0) {
                        id.leafwiseFlat = false;
                        break;
                    }
        }
    id.sameFoliationSymmetry = true;
    for (std::size_t i = 0; i < n && id.sameFoliationSymmetry; ++i)
        for (std::size_t j = 0; j < n && id.sameFoliationSymmetry; ++j)
            for (std::size_t k = 0; k < n && id.sameFoliationSymmetry; ++k) {
                if (!same_side(j, k)) continue;
                for (std::size_t l = 0; l < n; ++l)
                    if (ctensor.at(l, i, j, k) != ctensor.at(l, i, k, j)) {
                        id.sameFoliationSymmetry = false;
                        break;
                    }
                if (!id.sameFoliationSymmetry) break;
            }
    return id;
}

RicciMatrix ricci(const CurvatureTensor& ctensor) {
    const std::size_t n = ctensor.n;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational tr = 0;
            for (std::size_t k = 0; k < n; ++k) tr += ctensor.at(k, k, i, j);
            m.at(i, j) = std::move(tr);
        }
    return RicciMatrix{std::move(m)};
}

ConnectionTable levi_civita_on(const LieAlgebra& g, const Matrix& metric,
                               const std::vector<Vector>& basis) {
    const std::size_t n = g.dim;
    if (metric.rows != n || metric.cols != n)
        throw std::invalid_argument("levi_civita: metric shape mismatch");
    if (determinant(metric) == 0)
        throw std::invalid_argument("levi_civita: degenerate metric");
    const auto cinv = inverse(basis_columns(basis));
    if (!cinv) throw std::invalid_argument("levi_civita: vectors do not form a basis");
    auto gdot = [&](const Vector& u, const Vector& v) {
        Rational r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (metric.at(i, j) != 0 && v[j] != 0) r += u[i] * metric.at(i, j) * v[j];
        }
        return r;
    };
    ConnectionTable ct;
    ct.basis = basis;
    ct.n = n;
    ct.gamma.assign(n * n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // Koszul: 2 g(v, e_z) = g([x,y],e_z) - g([y,e_z],x) + g([e_z,x],y)
            const Vector& x = basis[i];
            const Vector& y = basis[j];
            const Vector bxy = bracket(g, x, y);
            Vector rhs(n, Rational(0));
            for (std::size_t z = 0; z < n; ++z) {
                const Vector ez = basis_vector(n, z);
                rhs[z] = gdot(bxy, ez) - gdot(bracket(g, y, ez), x) +
                         gdot(bracket(g, ez, x), y);
                rhs[z] /= 2;
            }
            const auto v = solve(metric, rhs); // metric symmetric: rows give g(., e_z)
            if (!v) throw std::invalid_argument("levi_civita: inconsistent system");
            const Vector coeffs = mat_vec(*cinv, *v);
            for (std::size_t k = 0; k < n; ++k) ct.g(k, i, j) = coeffs[k];
        }
    return ct;
}

ConnectionTable levi_civita(const LieAlgebra& g, const Matrix& metric) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < g.dim; ++i) basis.push_back(basis_vector(g.dim, i));
    return levi_civita_on(g, metric, basis);
}

} // namespace bilag

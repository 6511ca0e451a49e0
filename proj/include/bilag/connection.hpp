#pragma once
#include "bilag/symplectic.hpp"

namespace bilag {

// Christoffel data of a left-invariant connection on a stated basis:
// nabla_{b_i} b_j = sum_k gamma[k][i][j] b_k, flattened as gamma[(k*n+i)*n+j].
struct ConnectionTable {
    std::vector<Vector> basis; // n vectors in e-coordinates
    std::size_t n = 0;
    std::vector<Rational> gamma;

    Rational& g(std::size_t k, std::size_t i, std::size_t j) { return gamma[(k * n + i) * n + j]; }
    const Rational& g(std::size_t k, std::size_t i, std::size_t j) const { return gamma[(k * n + i) * n + j]; }
};

// R(b_i,b_j)b_k = sum_l r[l][i][j][k], flattened as r[((l*n+i)*n+j)*n+k].
struct CurvatureTensor {
    std::size_t n = 0;
    std::vector<Rational> r;
    Rational& at(std::size_t l, std::size_t i, std::size_t j, std::size_t k) {
        return r[((l * n + i) * n + j) * n + k];
    }
    const Rational& at(std::size_t l, std::size_t i, std::size_t j, std::size_t k) const {
        return r[((l * n + i) * n + j) * n + k];
    }
    bool is_zero() const;
};

struct RicciMatrix {
    Matrix ric;
};

// The unique D with w(D(x,y), z) = -w(y, [x, z]) for all z (left-invariant
// reduction of i_{D(X,Y)} w = L_X i_Y w). Throws on degenerate w.
Vector solve_D(const BiLagrangianStructure& b, const Vector& x, const Vector& y);

// nabla_x y of the canonical connection, in e-coordinates:
//   P_F D(x_F, y_F) + P_F [x_G, y_F] + P_G D(x_G, y_G) + P_G [x_F, y_G].
Vector canonical_nabla(const BiLagrangianStructure& b, const Vector& x, const Vector& y);

// Table of the canonical connection on the adapted basis (F rows then G rows).
ConnectionTable canonical_connection(const BiLagrangianStructure& b);
// Same connection on an explicitly given basis (used to compare against
// components displayed on non-echelonized combinations).
ConnectionTable canonical_connection_on(const BiLagrangianStructure& b,
                                        const std::vector<Vector>& basis);

// T(b_i,b_j) = nabla_i b_j - nabla_j b_i - [b_i,b_j], coordinates on ct.basis;
// flattened like gamma. Zero iff torsion-free.
std::vector<Rational> torsion(const LieAlgebra& g, const ConnectionTable& ct);

// (nabla_{b_i} w)(b_j,b_k) = -w(nabla_i b_j, b_k) - w(b_j, nabla_i b_k).
std::vector<Rational> nabla_omega(const ConnectionTable& ct, const SymplecticForm& w);

// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z on ct.basis.
CurvatureTensor curvature(const LieAlgebra& g, const ConnectionTable& ct);

struct CurvatureIdentities {
    bool bianchi = false;           // cyclic sum R(x,y)z + R(y,z)x + R(z,x)y = 0
    bool leafwiseFlat = false;      // R(x,y) = 0 for x,y in the same foliation
    bool sameFoliationSymmetry = false; // R(x,y)z = R(x,z)y for y,z in the same foliation
};

// ct/ctensor must be on the adapted basis of b (first half spans F).
CurvatureIdentities curvature_identities(const ConnectionTable& ct,
                                         const CurvatureTensor& ctensor,
                                         const BiLagrangianStructure& b);

// Ric(b_i, b_j) = trace of z -> R(z, b_i) b_j = sum_k coeff of b_k in R(b_k,b_i)b_j.
RicciMatrix ricci(const CurvatureTensor& ctensor);

// Left-invariant Levi-Civita connection of a (pseudo-)metric given on the
// e-basis, via the Koszul reduction
//   2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y),
// table expressed on the same explicit basis. Throws on degenerate metric.
ConnectionTable levi_civita(const LieAlgebra& g, const Matrix& metric);
ConnectionTable levi_civita_on(const LieAlgebra& g, const Matrix& metric,
                               const std::vector<Vector>& basis);

} // namespace bilag

#pragma once
#include "bilag/exterior.hpp"

namespace bilag {

struct SymplecticForm {
    KForm underlying;   // degree 2, closed, non-degenerate
    Matrix gram;        // n x n antisymmetric, w(e_i, e_j)
};

enum class SymplecticVerdict { yes, notClosed, degenerate };

// Closedness via ce_differential, non-degeneracy via exact determinant of the
// Gram matrix (determinant = Pfaffian^2 cross-check available in parametric).
SymplecticVerdict is_symplectic(const LieAlgebra& g, const KForm& w);

// Builds the validated form. Throws std::invalid_argument if not symplectic.
SymplecticForm make_symplectic(const LieAlgebra& g, const KForm& w);

// dim s = n/2 and w vanishes on all basis pairs of s.
bool is_lagrangian(const SymplecticForm& w, const Subspace& s);
bool is_lagrangian(const KForm& w, const Subspace& s); // same, unvalidated form

struct BiLagrangianStructure {
    const LieAlgebra* algebra = nullptr;
    SymplecticForm omega;
    Subspace f, g2;
};

struct BiLagrangianReport {
    bool closed = false, nonDegenerate = false;
    bool fSubalgebra = false, g2Subalgebra = false;
    bool fLagrangian = false, g2Lagrangian = false;
    bool complementary = false;
    bool pass() const {
        return closed && nonDegenerate && fSubalgebra && g2Subalgebra &&
               fLagrangian && g2Lagrangian && complementary;
    }
};

BiLagrangianReport verify_bilagrangian(const LieAlgebra& g, const KForm& w,
                                       const Subspace& f, const Subspace& g2);

// Throws std::invalid_argument when the report does not pass.
BiLagrangianStructure make_bilagrangian(const LieAlgebra& g, const KForm& w,
                                        const Subspace& f, const Subspace& g2);

struct ParaKaehlerPair {
    Matrix iOperator; // I = P_F - P_G in the e-basis; I^2 = id
    Matrix metric;    // g(e_i,e_j) = w(I e_i, e_j); symmetric, signature (n/2,n/2)
};

// Projections P_F, P_G of the splitting g = F (+) G, as matrices in the e-basis.
std::pair<Matrix, Matrix> splitting_projections(const BiLagrangianStructure& b);

ParaKaehlerPair para_kaehler(const BiLagrangianStructure& b);

} // namespace bilag

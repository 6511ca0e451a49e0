#pragma once
#include "bilag/matrix.hpp"
#include <array>
#include <string>
#include <vector>

namespace bilag {

// Coefficient vector on the basis e_1..e_n.
using Vector = std::vector<Rational>;

Vector basis_vector(std::size_t n, std::size_t i); // e_{i+1}
bool is_zero(const Vector& v);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scale(const Rational& c, const Vector& x);

// Nilpotent Lie algebra given by exact structure constants.
// c[k][idx(i,j)] is the e_{k+1}-coefficient of [e_{i+1}, e_{j+1}] for i < j;
// antisymmetry is implied.
struct LieAlgebra {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::vector<Rational>> c; // dim x (dim choose 2)

    static std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);
    // e_k coefficient of [e_i, e_j] (0-based i, j in any order).
    Rational structure_constant(std::size_t k, std::size_t i, std::size_t j) const;
};

// Subspace of a LieAlgebra; basis always held in reduced echelon form.
struct Subspace {
    const LieAlgebra* ambient = nullptr;
    std::vector<Vector> basis;        // RREF rows
    std::vector<std::size_t> pivots;  // pivot column per row
    std::size_t dimension = 0;
};

// Echelonizes the spanning vectors (drops dependent rows).
Subspace make_subspace(const LieAlgebra& g, const std::vector<Vector>& spanning);
bool contains(const Subspace& s, const Vector& v);
bool subspace_equal(const Subspace& a, const Subspace& b);

// Bilinear antisymmetric extension of the structure constants.
// Throws std::invalid_argument on dimension mismatch.
Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);

struct JacobiReport {
    bool pass = true;
    std::array<std::size_t, 3> violatingTriple{}; // 0-based, valid when !pass
};
JacobiReport check_jacobi(const LieAlgebra& g);

// dims of g >= [g,g] >= [g,[g,g]] >= ... until stabilization (ends with 0 iff
// nilpotent).
std::vector<std::size_t> lower_central_series(const LieAlgebra& g);

bool is_subalgebra(const Subspace& s);

// Necessary conditions for a subalgebra of a nilpotent algebra:
// dim span[s,s] <= max(dim s - 2, 0), and for dim s = 3 also [s,[s,s]] = 0.
// Evaluated on any subspace; the dim <= 1 case passes vacuously (the bound
// presumes dim >= 2).
bool nilpotent_subalgebra_filter(const Subspace& s);

bool is_complementary(const Subspace& f, const Subspace& g2);

} // namespace bilag

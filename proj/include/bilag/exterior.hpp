#pragma once
#include "bilag/liealg.hpp"
#include <map>
#include <utility>
#include <vector>

namespace bilag {

// Exterior form of degree 1..3 on g*: coefficients on strictly increasing
// index tuples (0-based) of the dual basis alpha_1..alpha_n.
struct KForm {
    int degree = 1;
    std::map<std::vector<std::size_t>, Rational> coeffs; // keys strictly increasing

    void add_term(std::vector<std::size_t> idx, Rational c); // sorts, signs, drops zeros
    Rational coeff(const std::vector<std::size_t>& idx) const;
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const KForm&) const = default;
};

KForm alpha(std::size_t i);                        // alpha_{i+1}, degree 1
KForm alpha2(std::size_t i, std::size_t j);        // alpha_{i+1} ^ alpha_{j+1}

KForm add(const KForm& a, const KForm& b);
KForm scale(const Rational& c, const KForm& a);
// Graded-antisymmetric product. Throws std::invalid_argument when the result
// degree would exceed the ambient dimension in use (checked by caller-supplied
// bound in evaluate contexts; plain wedge only checks degree <= 6).
KForm wedge(const KForm& a, const KForm& b);

// Evaluate a 2-form on two vectors.
Rational evaluate2(const KForm& w, const Vector& x, const Vector& y);
// Gram matrix w(e_i, e_j).
Matrix gram_matrix(const KForm& w, std::size_t n);

// Chevalley-Eilenberg differential for degree 1 and 2 forms:
//   (d a)(x,y)   = -a([x,y])
//   (d b)(x,y,z) = -b([x,y],z) + b([x,z],y) - b([y,z],x)
// Throws std::invalid_argument for other degrees.
KForm ce_differential(const LieAlgebra& g, const KForm& f);

// Echelonized basis of ker(d : Lambda^2 -> Lambda^3), coefficient order
// alpha_12 < alpha_13 < ... (lexicographic pairs).
std::vector<KForm> closed_two_forms_basis(const LieAlgebra& g);

// b1 = dim ker(d|Lambda^1); b2 = dim ker(d|Lambda^2) - dim im(d|Lambda^1).
std::pair<std::size_t, std::size_t> betti_numbers(const LieAlgebra& g);

} // namespace bilag

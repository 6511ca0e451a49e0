#pragma once
#include "bilag/rational.hpp"
#include <cstddef>
#include <optional>
#include <vector>

namespace bilag {

// Dense exact rational matrix, row major.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n);
    bool operator==(const Matrix&) const = default;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivotCols;
};

// Unique reduced row-echelon form (exact Gauss-Jordan, first-nonzero pivoting).
RrefResult rref(const Matrix& m);

// Solve a x = b; returns a solution if the system is consistent (the one with
// free variables set to zero), nullopt otherwise.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

// Exact determinant by pivoted elimination. Throws std::invalid_argument on
// non-square input.
Rational determinant(const Matrix& m);

struct Signature {
    std::size_t positives = 0, negatives = 0, zeros = 0;
    bool operator==(const Signature&) const = default;
};

// Sylvester inertia of a symmetric matrix by exact symmetric elimination
// (with the add-row trick when the diagonal pivot is zero). Throws
// std::invalid_argument if m is not symmetric.
Signature symmetric_signature(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

} // namespace bilag

#include "bilag/matrix.hpp"
#include <stdexcept>

namespace bilag {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && a.at(p, c) == 0) ++p;
        if (p == a.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
        const Rational inv = a.at(r, c);
        for (std::size_t j = 0; j < a.cols; ++j) a.at(r, j) /= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const Rational f = a.at(i, c);
            for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        res.pivotCols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows) throw std::invalid_argument("solve: dimension mismatch");
    Matrix aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    const RrefResult r = rref(aug);
    for (std::size_t c : r.pivotCols)
        if (c == a.cols) return std::nullopt; // pivot in the constant column
    std::vector<Rational> x(a.cols, Rational(0));
    for (std::size_t i = 0; i < r.pivotCols.size(); ++i)
        x[r.pivotCols[i]] = r.reduced.at(i, a.cols);
    return x;
}

Rational determinant(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: non-square input");
    Matrix a = m;
    const std::size_t n = a.rows;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a.at(p, c) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        const Rational inv = a.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            const Rational f = a.at(i, c) / inv;
            for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return det;
}

Signature symmetric_signature(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("symmetric_signature: non-square input");
    const std::size_t n = m.rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("symmetric_signature: non-symmetric input");
    // Symmetric (congruence) elimination: diag(d_1..d_n) with the same inertia.
    Matrix a = m;
    Signature sig;
    for (std::size_t c = 0; c < n; ++c) {
        if (a.at(c, c) == 0) {
            std::size_t k = c + 1;
            while (k < n && a.at(k, c) == 0) ++k;
            if (k == n) { ++sig.zeros; continue; } // trailing row/col c is zero
            if (a.at(k, k) != 0) {
                // congruence swap of rows and columns c,k
                for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(k, j));
                for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, c), a.at(i, k));
            } else {
                // a(k,k)=0, a(k,c)!=0: adding row+col k makes a(c,c)=2a(k,c)!=0
                for (std::size_t j = 0; j < n; ++j) a.at(c, j) += a.at(k, j);
                for (std::size_t i = 0; i < n; ++i) a.at(i, c) += a.at(i, k);
            }
        }
        const Rational piv = a.at(c, c);
        if (piv > 0) ++sig.positives; else ++sig.negatives;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            const Rational f = a.at(i, c) / piv;
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
            for (std::size_t j = 0; j < n; ++j) a.at(j, i) -= f * a.at(j, c);
        }
    }
    return sig;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: dimension mismatch");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: non-square input");
    const std::size_t n = m.rows;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const RrefResult r = rref(aug);
    if (r.rank < n || r.pivotCols[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

} // namespace bilag

#include "bilag/exterior.hpp"
#include <algorithm>
#include <stdexcept>

namespace bilag {

void KForm::add_term(std::vector<std::size_t> idx, Rational c) {
    if (c == 0) return;
    // bubble-sort the index tuple, tracking the permutation sign
    bool repeated = false;
    for (std::size_t i = 0; i + 1 < idx.size() && !repeated; ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
            if (idx[j] == idx[j + 1]) { repeated = true; break; }
            if (idx[j] > idx[j + 1]) { std::swap(idx[j], idx[j + 1]); c = -c; }
        }
    if (repeated) return;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return;
    auto it = coeffs.find(idx);
    if (it == coeffs.end()) {
        coeffs.emplace(std::move(idx), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

Rational KForm::coeff(const std::vector<std::size_t>& idx) const {
    // accept arbitrary index order; sign accordingly
    std::vector<std::size_t> s = idx;
    Rational sign = 1;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        for (std::size_t j = 0; j + 1 < s.size() - i; ++j) {
            if (s[j] == s[j + 1]) return Rational(0);
            if (s[j] > s[j + 1]) { std::swap(s[j], s[j + 1]); sign = -sign; }
        }
    auto it = coeffs.find(s);
    return it == coeffs.end() ? Rational(0) : sign * it->second;
}

KForm alpha(std::size_t i) {
    KForm f;
    f.degree = 1;
    f.add_term({i}, 1);
    return f;
}

KForm alpha2(std::size_t i, std::size_t j) {
    KForm f;
    f.degree = 2;
    f.add_term({i, j}, 1);
    return f;
}

KForm add(const KForm& a, const KForm& b) {
    if (a.degree != b.degree) throw std::invalid_argument("add: degree mismatch");
    KForm r = a;
    for (const auto& [idx, c] : b.coeffs) r.add_term(idx, c);
    return r;
}

KForm scale(const Rational& c, const KForm& a) {
    KForm r;
    r.degree = a.degree;
    if (c == 0) return r;
    for (const auto& [idx, v] : a.coeffs) r.coeffs.emplace(idx, c * v);
    return r;
}

KForm wedge(const KForm& a, const KForm& b) {
    KForm r;
    r.degree = a.degree + b.degree;
    if (r.degree > 6) throw std::invalid_argument("wedge: degree too large");
    for (const auto& [ia, ca] : a.coeffs)
        for (const auto& [ib, cb] : b.coeffs) {
            std::vector<std::size_t> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    return r;
}

Rational evaluate2(const KForm& w, const Vector& x, const Vector& y) {
    if (w.degree != 2) throw std::invalid_argument("evaluate2: need a 2-form");
    Rational r = 0;
    for (const auto& [idx, c] : w.coeffs) {
        const std::size_t i = idx[0], j = idx[1];
        r += c * (x.at(i) * y.at(j) - x.at(j) * y.at(i));
    }
    return r;
}

Matrix gram_matrix(const KForm& w, std::size_t n) {
    if (w.degree != 2) throw std::invalid_argument("gram_matrix: need a 2-form");
    Matrix m(n, n);
    for (const auto& [idx, c] : w.coeffs) {
        m.at(idx[0], idx[1]) = c;
        m.at(idx[1], idx[0]) = -c;
    }
    return m;
}

KForm ce_differential(const LieAlgebra& g, const KForm& f) {
    const std::size_t n = g.dim;
    KForm r;
    if (f.degree == 1) {
        r.degree = 2;
        // (da)(e_i,e_j) = -a([e_i,e_j]) = -sum_k c^k_{ij} a_k
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Rational v = 0;
                for (const auto& [idx, c] : f.coeffs)
                    v -= c * g.structure_constant(idx[0], i, j);
                if (v != 0) r.add_term({i, j}, v);
            }
        return r;
    }
    if (f.degree == 2) {
        r.degree = 3;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    const Vector bij = bracket(g, basis_vector(n, i), basis_vector(n, j));
                    const Vector bik = bracket(g, basis_vector(n, i), basis_vector(n, k));
                    const Vector bjk = bracket(g, basis_vector(n, j), basis_vector(n, k));
                    Rational v = 0;
                    for (std::size_t m = 0; m < n; ++m) {
                        if (bij[m] != 0) v -= bij[m] * f.coeff({m, k});
                        if (bik[m] != 0) v += bik[m] * f.coeff({m, j});
                        if (bjk[m] != 0) v -= bjk[m] * f.coeff({m, i});
                    }
                    if (v != 0) r.add_term({i, j, k}, v);
                }
        return r;
    }
    throw std::invalid_argument("ce_differential: degree must be 1 or 2");
}

namespace {

std::vector<std::vector<std::size_t>> pair_keys(std::size_t n) {
    std::vector<std::vector<std::size_t>> keys;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) keys.push_back({i, j});
    return keys;
}

std::vector<std::vector<std::size_t>> triple_keys(std::size_t n) {
    std::vector<std::vector<std::size_t>> keys;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) keys.push_back({i, j, k});
    return keys;
}

// Matrix of d : Lambda^2 -> Lambda^3 in the lexicographic pair/triple bases.
Matrix d2_matrix(const LieAlgebra& g) {
    const auto pk = pair_keys(g.dim);
    const auto tk = triple_keys(g.dim);
    Matrix m(tk.size(), pk.size());
    for (std::size_t c = 0; c < pk.size(); ++c) {
        const KForm df = ce_differential(g, alpha2(pk[c][0], pk[c][1]));
        for (std::size_t r = 0; r < tk.size(); ++r) m.at(r, c) = df.coeff(tk[r]);
    }
    return m;
}

// Echelonized kernel basis of an m x n matrix, rows indexed by column keys.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& a) {
    const RrefResult r = rref(a);
    std::vector<bool> isPivot(a.cols, false);
    for (std::size_t c : r.pivotCols) isPivot[c] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < a.cols; ++f) {
        if (isPivot[f]) continue;
        std::vector<Rational> v(a.cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivotCols.size(); ++i)
            v[r.pivotCols[i]] = -r.reduced.at(i, f);
        out.push_back(std::move(v));
    }
    // echelonize the kernel vectors themselves for a canonical presentation
    Matrix k(out.size(), a.cols);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < a.cols; ++j) k.at(i, j) = out[i][j];
    const RrefResult kr = rref(k);
    std::vector<std::vector<Rational>> res;
    for (std::size_t i = 0; i < kr.rank; ++i) {
        std::vector<Rational> v(a.cols);
        for (std::size_t j = 0; j < a.cols; ++j) v[j] = kr.reduced.at(i, j);
        res.push_back(std::move(v));
    }
    return res;
}

} // namespace

std::vector<KForm> closed_two_forms_basis(const LieAlgebra& g) {
    const auto pk = pair_keys(g.dim);
    const auto ker = kernel_basis(d2_matrix(g));
    std::vector<KForm> out;
    for (const auto& v : ker) {
        KForm f;
        f.degree = 2;
        for (std::size_t c = 0; c < pk.size(); ++c)
            if (v[c] != 0) f.add_term(pk[c], v[c]);
        out.push_back(std::move(f));
    }
    return out;
}

std::pair<std::size_t, std::size_t> betti_numbers(const LieAlgebra& g) {
    const std::size_t n = g.dim;
    const auto pk = pair_keys(n);
    // d1 : Lambda^1 -> Lambda^2
    Matrix d1(pk.size(), n);
    for (std::size_t c = 0; c < n; ++c) {
        const KForm df = ce_differential(g, alpha(c));
        for (std::size_t r = 0; r < pk.size(); ++r) d1.at(r, c) = df.coeff(pk[r]);
    }
    const std::size_t rank_d1 = rref(d1).rank;
    const std::size_t b1 = n - rank_d1;
    const std::size_t rank_d2 = rref(d2_matrix(g)).rank;
    const std::size_t ker_d2 = pk.size() - rank_d2;
    return {b1, ker_d2 - rank_d1};
}

} // namespace bilag

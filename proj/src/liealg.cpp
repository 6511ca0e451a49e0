#include "bilag/liealg.hpp"
#include <stdexcept>

namespace bilag {

Vector basis_vector(std::size_t n, std::size_t i) {
    Vector v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vector add(const Vector& x, const Vector& y) {
    Vector r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y.at(i);
    return r;
}

Vector sub(const Vector& x, const Vector& y) {
    Vector r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y.at(i);
    return r;
}

Vector scale(const Rational& c, const Vector& x) {
    Vector r = x;
    for (auto& v : r) v *= c;
    return r;
}

std::size_t LieAlgebra::pair_index(std::size_t n, std::size_t i, std::size_t j) {
    // index of (i,j), i<j, in lex order over pairs from {0..n-1}
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Rational LieAlgebra::structure_constant(std::size_t k, std::size_t i, std::size_t j) const {
    if (i == j) return Rational(0);
    if (i < j) return c[k][pair_index(dim, i, j)];
    return -c[k][pair_index(dim, j, i)];
}

Subspace make_subspace(const LieAlgebra& g, const std::vector<Vector>& spanning) {
    Matrix m(spanning.size(), g.dim);
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        if (spanning[i].size() != g.dim)
            throw std::invalid_argument("make_subspace: vector dimension mismatch");
        for (std::size_t j = 0; j < g.dim; ++j) m.at(i, j) = spanning[i][j];
    }
    const RrefResult r = rref(m);
    Subspace s;
    s.ambient = &g;
    s.dimension = r.rank;
    s.pivots = r.pivotCols;
    for (std::size_t i = 0; i < r.rank; ++i) {
        Vector row(g.dim);
        for (std::size_t j = 0; j < g.dim; ++j) row[j] = r.reduced.at(i, j);
        s.basis.push_back(std::move(row));
    }
    return s;
}

bool contains(const Subspace& s, const Vector& v) {
    // reduce v against the RREF basis; membership iff the residue vanishes
    Vector w = v;
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
        const Rational f = w[s.pivots[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * s.basis[i][j];
    }
    return is_zero(w);
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    // RREF basis is canonical per subspace
    return a.dimension == b.dimension && a.basis == b.basis;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
    if (x.size() != g.dim || y.size() != g.dim)
        throw std::invalid_argument("bracket: dimension mismatch");
    Vector r(g.dim, Rational(0));
    for (std::size_t i = 0; i < g.dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g.dim; ++j) {
            if (y[j] == 0 || i == j) continue;
            const Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < g.dim; ++k) {
                const Rational& ck = g.structure_constant(k, i, j);
                if (ck != 0) r[k] += f * ck;
            }
        }
    }
    return r;
}

JacobiReport check_jacobi(const LieAlgebra& g) {
    JacobiReport rep;
    const std::size_t n = g.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ei = basis_vector(n, i), ej = basis_vector(n, j),
                             ek = basis_vector(n, k);
                Vector s = bracket(g, bracket(g, ei, ej), ek);
                s = add(s, bracket(g, bracket(g, ej, ek), ei));
                s = add(s, bracket(g, bracket(g, ek, ei), ej));
                if (!is_zero(s)) {
                    rep.pass = false;
                    rep.violatingTriple = {i, j, k};
                    return rep;
                }
            }
    return rep;
}

std::vector<std::size_t> lower_central_series(const LieAlgebra& g) {
    std::vector<std::size_t> dims{g.dim};
    // current term as a subspace; g^1 = g
    std::vector<Vector> cur;
    for (std::size_t i = 0; i < g.dim; ++i) cur.push_back(basis_vector(g.dim, i));
    Subspace curS = make_subspace(g, cur);
    while (true) {
        // next = [g, cur]
        std::vector<Vector> next;
        for (std::size_t i = 0; i < g.dim; ++i)
            for (const Vector& v : curS.basis)
                next.push_back(bracket(g, basis_vector(g.dim, i), v));
        Subspace nextS = make_subspace(g, next);
        if (nextS.dimension == curS.dimension) break; // stabilized (non-nilpotent tail)
        dims.push_back(nextS.dimension);
        if (nextS.dimension == 0) break;
        curS = std::move(nextS);
    }
    return dims;
}

bool is_subalgebra(const Subspace& s) {
    const LieAlgebra& g = *s.ambient;
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        for (std::size_t j = i + 1; j < s.basis.size(); ++j)
            if (!contains(s, bracket(g, s.basis[i], s.basis[j]))) return false;
    return true;
}

bool nilpotent_subalgebra_filter(const Subspace& s) {
    const LieAlgebra& g = *s.ambient;
    const std::size_t d = s.dimension;
    if (d <= 1) return true;
    std::vector<Vector> derived;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            derived.push_back(bracket(g, s.basis[i], s.basis[j]));
    Subspace ds = make_subspace(g, derived);
    if (ds.dimension > d - 2) return false;
    if (d == 3) {
        // a 3-dim nilpotent subalgebra is abelian or Heisenberg: [s,[s,s]] = 0
        for (const Vector& u : s.basis)
            for (const Vector& v : ds.basis)
                if (!is_zero(bracket(g, u, v))) return false;
    }
    return true;
}

bool is_complementary(const Subspace& f, const Subspace& g2) {
    const LieAlgebra& g = *f.ambient;
    if (f.dimension + g2.dimension != g.dim) return false;
    std::vector<Vector> all = f.basis;
    all.insert(all.end(), g2.basis.begin(), g2.basis.end());
    return make_subspace(g, all).dimension == g.dim;
}

} // namespace bilag

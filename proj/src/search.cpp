#include "bilag/search.hpp"
#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bilag {

std::vector<Rational> coefficient_values(unsigned height) {
    std::vector<Rational> vals{Rational(0)};
    for (unsigned h = 1; h <= height; ++h)
        for (unsigned q = 1; q <= h; ++q)
            for (unsigned p = 1; p <= h; ++p) {
                if (std::max(p, q) != h || std::gcd(p, q) != 1) continue;
                vals.push_back(rat(static_cast<long>(p), static_cast<long>(q)));
                vals.push_back(rat(-static_cast<long>(p), static_cast<long>(q)));
            }
    return vals;
}

namespace {

std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), std::size_t{0});
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

// Free cells of an echelon pattern, row-major: (row, col) with col right of the
// row's pivot and not a pivot column.
std::vector<std::pair<std::size_t, std::size_t>> grid_cells(const std::vector<std::size_t>& pat,
                                                            std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < pat.size(); ++r)
        for (std::size_t c = pat[r] + 1; c < n; ++c)
            if (std::find(pat.begin(), pat.end(), c) == pat.end()) out.emplace_back(r, c);
    return out;
}

std::vector<Vector> pattern_rows(const std::vector<std::size_t>& pat, std::size_t n,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                                 const std::vector<Rational>& vals,
                                 const std::vector<unsigned>& tuple) {
    std::vector<Vector> rows;
    rows.reserve(pat.size());
    for (const std::size_t p : pat) {
        Vector v(n, Rational(0));
        v[p] = 1;
        rows.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
        rows[cells[i].first][cells[i].second] = vals[tuple[i]];
    return rows;
}

// Lexicographic index tuples of length k, entries 0..maxidx, summing to w.
// fn returns false to abort; the return value propagates the abort.
template <typename Fn>
bool visit_comps(std::uint64_t w, std::size_t k, unsigned maxidx, std::vector<unsigned>& acc,
                 const Fn& fn) {
    if (k == 0) return w == 0 ? fn(acc) : true;
    const unsigned hi = static_cast<unsigned>(std::min<std::uint64_t>(w, maxidx));
    for (unsigned c0 = 0; c0 <= hi; ++c0) {
        acc.push_back(c0);
        const bool keep = visit_comps(w - c0, k - 1, maxidx, acc, fn);
        acc.pop_back();
        if (!keep) return false;
    }
    return true;
}

struct StreamTables {
    std::size_t n = 0, k = 0;
    std::vector<Rational> vals;
    unsigned maxidx = 0;
    std::vector<std::vector<std::size_t>> pats;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cells;
    std::uint64_t maxWF = 0, maxWG = 0;
};

StreamTables make_tables(const LieAlgebra& g, const SearchConfig& cfg) {
    StreamTables t;
    t.n = g.dim;
    t.k = g.dim / 2;
    t.vals = coefficient_values(cfg.coefficientHeight);
    t.maxidx = static_cast<unsigned>(t.vals.size() - 1);
    t.pats = pivot_patterns(t.n, t.k);
    t.cells.reserve(t.pats.size());
    for (const auto& p : t.pats) {
        t.cells.push_back(grid_cells(p, t.n));
        t.maxWF = std::max<std::uint64_t>(t.maxWF, std::uint64_t{t.maxidx} * t.cells.back().size());
    }
    t.maxWG = std::uint64_t{t.maxidx} * (t.k * t.k);
    return t;
}

// F candidates of one weight in canonical order: coordinate phase at weight 0
// (strategy coordinateFirst only), then per pattern (lex) the weight-w cell
// tuples (lex). fn(patIdx, rows) returns false to abort.
template <typename Fn>
bool for_f_of_weight(const StreamTables& t, SearchStrategy strategy, std::uint64_t w,
                     const Fn& fn) {
    static const std::vector<std::pair<std::size_t, std::size_t>> noCells;
    static const std::vector<unsigned> noTuple;
    if (strategy == SearchStrategy::coordinateFirst && w == 0) {
        for (std::size_t pi = 0; pi < t.pats.size(); ++pi)
            if (!fn(pi, pattern_rows(t.pats[pi], t.n, noCells, t.vals, noTuple))) return false;
        return true;
    }
    for (std::size_t pi = 0; pi < t.pats.size(); ++pi) {
        const auto& cl = t.cells[pi];
        if (w > std::uint64_t{t.maxidx} * cl.size()) continue;
        std::vector<unsigned> acc;
        const bool keep = visit_comps(w, cl.size(), t.maxidx, acc,
                                      [&](const std::vector<unsigned>& tuple) {
                                          return fn(pi, pattern_rows(t.pats[pi], t.n, cl, t.vals,
                                                                     tuple));
                                      });
        if (!keep) return false;
    }
    return true;
}

// Basis {e_c + phi(e_c)} of the complement determined by a phi-matrix tuple.
std::vector<Vector> complement_rows(const StreamTables& t, const std::vector<std::size_t>& pat,
                                    const std::vector<Vector>& frows,
                                    const std::vector<unsigned>& phi) {
    std::vector<std::size_t> comp;
    for (std::size_t c = 0; c < t.n; ++c)
        if (std::find(pat.begin(), pat.end(), c) == pat.end()) comp.push_back(c);
    std::vector<Vector> rows;
    rows.reserve(comp.size());
    for (std::size_t ci = 0; ci < comp.size(); ++ci) {
        Vector v(t.n, Rational(0));
        v[comp[ci]] = 1;
        for (std::size_t fi = 0; fi < t.k; ++fi) {
            const Rational& coef = t.vals[phi[ci * t.k + fi]];
            if (coef == 0) continue;
            for (std::size_t a = 0; a < t.n; ++a) v[a] += coef * frows[fi][a];
        }
        rows.push_back(std::move(v));
    }
    return rows;
}

} // namespace

std::vector<Subspace> enumerate_candidates(const LieAlgebra& g, const SearchConfig& cfg,
                                           std::size_t limit) {
    const StreamTables t = make_tables(g, cfg);
    std::vector<Subspace> out;
    if (limit == 0) return out;
    if (cfg.strategy == SearchStrategy::random) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::size_t> patDist(0, t.pats.size() - 1);
        std::uniform_int_distribution<unsigned> valDist(0, t.maxidx);
        while (out.size() < limit) {
            const std::size_t pi = patDist(rng);
            std::vector<unsigned> tuple(t.cells[pi].size());
            for (auto& x : tuple) x = valDist(rng);
            out.push_back(make_subspace(g, pattern_rows(t.pats[pi], t.n, t.cells[pi], t.vals,
                                                        tuple)));
        }
        return out;
    }
    for (std::uint64_t w = 0; w <= t.maxWF && out.size() < limit; ++w)
        for_f_of_weight(t, cfg.strategy, w, [&](std::size_t, const std::vector<Vector>& rows) {
            out.push_back(make_subspace(g, rows));
            return out.size() < limit;
        });
    return out;
}

SearchOutcome search_bilagrangian(const LieAlgebra& g, const KForm& w, const SearchConfig& cfg) {
    if (is_symplectic(g, w) != SymplecticVerdict::yes)
        throw std::invalid_argument("search_bilagrangian: the 2-form is not symplectic");
    const StreamTables t = make_tables(g, cfg);
    SearchOutcome out;
    std::uint64_t& tried = out.candidatesTried;
    FilterStats& stats = out.filterStats;

    const auto pipeline = [&](const Subspace& s) {
        if (!is_subalgebra(s)) {
            ++stats.notSubalgebra;
            return false;
        }
        if (!nilpotent_subalgebra_filter(s)) {
            ++stats.lemma21Filter;
            return false;
        }
        if (!is_lagrangian(w, s)) {
            ++stats.notLagrangian;
            return false;
        }
        return true;
    };

    if (cfg.strategy == SearchStrategy::random) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::size_t> patDist(0, t.pats.size() - 1);
        std::uniform_int_distribution<unsigned> valDist(0, t.maxidx);
        while (tried < cfg.budget && !out.found) {
            const std::size_t pi = patDist(rng);
            std::vector<unsigned> tuple(t.cells[pi].size());
            for (auto& x : tuple) x = valDist(rng);
            ++tried;
            const Subspace f =
                make_subspace(g, pattern_rows(t.pats[pi], t.n, t.cells[pi], t.vals, tuple));
            if (!pipeline(f)) continue;
            if (tried >= cfg.budget) break;
            std::vector<unsigned> phi(t.k * t.k);
            for (auto& x : phi) x = valDist(rng);
            ++tried;
            const Subspace g2 = make_subspace(g, complement_rows(t, t.pats[pi], f.basis, phi));
            if (!pipeline(g2)) continue;
            out.found = make_bilagrangian(g, w, f, g2);
        }
        out.stop = out.found ? SearchStop::found : SearchStop::budgetExhausted;
        return out;
    }

    struct Survivor {
        std::uint64_t wF;
        std::size_t patIdx;
        Subspace f;
    };
    std::vector<Survivor> survivors;

    for (std::uint64_t total = 0; total <= t.maxWF + t.maxWG; ++total) {
        if (out.found || tried >= cfg.budget) break;
        for_f_of_weight(t, cfg.strategy, total,
                        [&](std::size_t pi, const std::vector<Vector>& rows) {
                            if (tried >= cfg.budget) return false;
                            ++tried;
                            Subspace f = make_subspace(g, rows);
                            if (pipeline(f)) survivors.push_back({total, pi, std::move(f)});
                            return true;
                        });
        if (tried >= cfg.budget) break;
        for (std::size_t si = 0; si < survivors.size(); ++si) {
            const Survivor& s = survivors[si];
            if (total < s.wF || total - s.wF > t.maxWG) continue;
            bool hit = false;
            std::vector<unsigned> acc;
            visit_comps(total - s.wF, t.k * t.k, t.maxidx, acc,
                        [&](const std::vector<unsigned>& phi) {
                            if (tried >= cfg.budget) return false;
                            ++tried;
                            const Subspace g2 = make_subspace(
                                g, complement_rows(t, t.pats[s.patIdx], s.f.basis, phi));
                            if (!pipeline(g2)) return true;
                            out.found = make_bilagrangian(g, w, s.f, g2);
                            hit = true;
                            return false;
                        });
            if (hit || tried >= cfg.budget) break;
        }
    }

    if (out.found) {
        out.stop = SearchStop::found;
    } else if (tried >= cfg.budget) {
        out.stop = SearchStop::budgetExhausted;
    } else {
        out.stop = SearchStop::gridExhausted;
        stats.noComplement += survivors.size();
    }
    return out;
}

} // namespace bilag

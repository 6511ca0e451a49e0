#pragma once
#include "bilag/symplectic.hpp"
#include <cstdint>
#include <optional>

namespace bilag {

enum class SearchStrategy { coordinateFirst, echelonGrid, random };

struct SearchConfig {
    std::uint64_t seed = 0;
    std::uint64_t budget = 200000;   // max candidates evaluated (F plus G)
    unsigned coefficientHeight = 1;  // max of |p|, q over trial coefficients
    SearchStrategy strategy = SearchStrategy::coordinateFirst;
};

enum class SearchStop { found, budgetExhausted, gridExhausted };

struct FilterStats {
    std::uint64_t notSubalgebra = 0;
    std::uint64_t lemma21Filter = 0; // never fires after is_subalgebra (kept for contract)
    std::uint64_t notLagrangian = 0;
    std::uint64_t noComplement = 0;  // surviving F whose complement grid finished empty
};

struct SearchOutcome {
    std::optional<BiLagrangianStructure> found;
    SearchStop stop = SearchStop::gridExhausted;
    std::uint64_t candidatesTried = 0;
    FilterStats filterStats;
};

// Balanced trial-coefficient order: 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, ...
// (per height h: denominators ascending, numerators ascending, + before -).
std::vector<Rational> coefficient_values(unsigned height);

// Deterministic stream of half-dimension candidate subspaces: all coordinate
// subspaces in lexicographic pivot-pattern order first (strategy
// coordinateFirst), then reduced-echelon grids over every pivot pattern,
// weight-graded: a candidate's weight is the sum of its cells' value indices;
// weights ascend, ties broken by pattern then tuple lexicographic order.
// Used standalone by tests; search_bilagrangian interleaves the same stream
// with complement grids (see below).
std::vector<Subspace> enumerate_candidates(const LieAlgebra& g, const SearchConfig& cfg,
                                           std::size_t limit);

// Budgeted, seeded witness search. Pipeline per candidate F: is_subalgebra ->
// nilpotent_subalgebra_filter -> is_lagrangian; every surviving F is paired
// with the grid of its complements: each complement of F has a unique basis
// {e_c + phi(e_c) : c not a pivot of F} with phi(e_c) in F, so the
// (n/2) x (n/2) phi-matrix grid enumerates complements exactly once.
// F-candidates and complement candidates are dovetailed by combined weight
// (canonical order: total weight, then F stream position, then phi tuple),
// so the first-found witness is schedule-independent. The first G surviving
// the same Lagrangian/subalgebra pipeline completes the structure, which is
// re-verified before return. Throws std::invalid_argument when w is not
// symplectic.
SearchOutcome search_bilagrangian(const LieAlgebra& g, const KForm& w,
                                  const SearchConfig& cfg);

} // namespace bilag

#pragma once
#include "bilag/symplectic.hpp"
#include <optional>
#include <string>
#include <vector>

namespace bilag {

// One catalog row: canonical structure constants, the listed symplectic form,
// the printed witness pair (when the algebra is bi-Lagrangian), the expected
// flat/non-flat verdict and Betti numbers, plus the notation aliases.
struct CatalogEntry {
    std::string name;                     // canonical name, e.g. "L6,12"
    std::size_t dim = 0;
    std::vector<std::string> dalphaTokens; // one token string per alpha_i
    std::optional<KForm> symplecticForm;
    std::string formSource;               // "BM" | "K" | "" when no form listed
    // Witness bases exactly as printed (not echelonized).
    std::optional<std::vector<Vector>> witnessF, witnessG;
    std::optional<bool> expectedFlat;
    std::optional<std::pair<std::size_t, std::size_t>> expectedBetti;
    // Aliases: survey tuple, classification number; plus the signed basis
    // permutation relating the survey tuple's basis to the canonical one
    // (entry i holds s*(j+1), meaning tilde e_i = s * e_j, s = +-1).
    std::string salamonTuple;             // e.g. "0,0,0,12,13+42,14+23"
    std::string khakimdjanovNumber;       // e.g. "12"; empty for dim != 6
    std::vector<int> aliasPerm;           // empty when identity

    LieAlgebra algebra() const;           // built from dalphaTokens
};

// Parse one Salamon-style token ("0", "12", "13+42", "16+2*25+34", "14-25");
// returns a 2-form; digit pair "jk" is alpha_j ^ alpha_k with orientation sign
// (so "42" = -alpha_24); an optional rational coefficient prefix "c*" scales a
// pair. Throws CatalogParseError with position diagnostics on malformed input.
KForm parse_salamon_token(const std::string& token, std::size_t dim);
std::vector<KForm> parse_salamon(const std::vector<std::string>& tokens, std::size_t dim);
// Canonical re-serialization (round-trip partner of parse_salamon_token).
std::string serialize_form(const KForm& f);

struct CatalogParseError {
    std::string message;
    std::size_t line = 0;   // 1-based; 0 when not file-based
    std::size_t column = 0; // 1-based position inside the token/line
};

// Parse a basis vector in CLI syntax: "e1", "e2-2*e1", "-3*e5+e6", "1/2*e3".
// Throws CatalogParseError on malformed input.
Vector parse_vector(const std::string& s, std::size_t dim);
std::string serialize_vector(const Vector& v);

struct LoadedCatalog {
    std::vector<CatalogEntry> entries;
    // Self-validation problems (entry name -> description); loading continues
    // past flagged entries.
    std::vector<std::pair<std::string, std::string>> flagged;
};

// Built-in tables (30 entries: 1 of dim 2, 3 of dim 4, 26 of dim 6).
LoadedCatalog load_catalog();
// Line-oriented external file (same schema as the builtin data).
LoadedCatalog load_catalog(const std::string& path);

// Lookup accepting the canonical name or any alias (survey tuple with or
// without parentheses/spaces, classification number). Throws
// CatalogParseError with a nearest-name suggestion when unknown.
const CatalogEntry& entry(const LoadedCatalog& cat, const std::string& name);

} // namespace bilag

#pragma once
#include "bilag/liealg.hpp"
#include <map>
#include <string>
#include <vector>

namespace bilag {

// Multivariate polynomial over Q in named parameters (a2..a6, b2.., c.., x..,
// y.., z.., w12..). Monomial = sorted sparse exponent vector over interned
// variable ids; no zero coefficients stored.
struct ParamPoly {
    using Monomial = std::vector<std::pair<std::size_t, unsigned>>; // (varId, exp), varId ascending
    std::map<Monomial, Rational> terms;

    static std::size_t var_id(const std::string& name); // interns
    static const std::string& var_name(std::size_t id);

    static ParamPoly constant(const Rational& c);
    static ParamPoly variable(const std::string& name);

    bool is_zero() const { return terms.empty(); }
    bool operator==(const ParamPoly&) const = default;
};

ParamPoly add(const ParamPoly& a, const ParamPoly& b);
ParamPoly sub(const ParamPoly& a, const ParamPoly& b);
ParamPoly mul(const ParamPoly& a, const ParamPoly& b);
ParamPoly scale(const Rational& c, const ParamPoly& a);
ParamPoly negate(const ParamPoly& a);
std::string to_string(const ParamPoly& p);

// Substitute rational values for a subset of variables (partial evaluation).
ParamPoly substitute(const ParamPoly& p,
                     const std::map<std::string, Rational>& values);

struct ParamVector {
    std::vector<ParamPoly> coords;
};

ParamVector param_add(const ParamVector& u, const ParamVector& v);
ParamVector param_scale(const ParamPoly& c, const ParamVector& u);
bool param_is_zero(const ParamVector& u);

// Bilinear extension of the bracket with polynomial coefficients.
ParamVector parametric_bracket(const LieAlgebra& g, const ParamVector& u,
                               const ParamVector& v);

// Antisymmetric n x n matrix of ParamPoly entries (a symbolic 2-form family).
struct ParamGram {
    std::size_t n = 0;
    std::vector<ParamPoly> a; // row major
    ParamPoly& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const ParamPoly& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// Pfaffian by the perfect-matching expansion (15 terms at n = 6). Throws on
// odd dimension.
ParamPoly parametric_pfaffian(const ParamGram& m);
// Symbolic determinant (for the Pf^2 = det identity check).
ParamPoly parametric_determinant(const ParamGram& m);

struct LemmaCheck {
    std::string label;
    bool pass = false;
    std::string detail; // first differing coordinate when failing
};
struct LemmaReport {
    std::string lemmaId;
    std::vector<LemmaCheck> checks;
    bool pass() const {
        for (const auto& c : checks) if (!c.pass) return false;
        return !checks.empty();
    }
};

// Verifies the displayed bracket/Pfaffian identities of one lemma, data-driven
// from the lemma data file (see data/lemmas.txt). Throws std::invalid_argument
// on unknown id.
LemmaReport verify_lemma_identity(const std::string& lemmaId);
std::vector<std::string> lemma_ids();

} // namespace bilag

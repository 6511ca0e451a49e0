#pragma once
#include "bilag/catalog.hpp"
#include "bilag/symplectic.hpp"

#include <memory>
#include <string>
#include <vector>

namespace testutil {

inline const bilag::LoadedCatalog& catalog() {
    static const bilag::LoadedCatalog cat = bilag::load_catalog();
    return cat;
}

inline bilag::LieAlgebra algebra(const std::string& name) {
    return bilag::entry(catalog(), name).algebra();
}

inline const bilag::CatalogEntry& entry(const std::string& name) {
    return bilag::entry(catalog(), name);
}

// Vector literal in CLI syntax, e.g. vec(6, "e2-2*e1").
inline bilag::Vector vec(std::size_t dim, const std::string& s) {
    return bilag::parse_vector(s, dim);
}

inline std::vector<bilag::Vector> vecs(std::size_t dim, std::initializer_list<const char*> ss) {
    std::vector<bilag::Vector> out;
    for (const char* s : ss) out.push_back(vec(dim, s));
    return out;
}

// Validated bi-Lagrangian structure built from a catalog witness. The algebra
// lives behind a unique_ptr so the internal pointers stay valid across moves.
struct Witness {
    std::unique_ptr<bilag::LieAlgebra> g;
    bilag::BiLagrangianStructure b;
    std::vector<bilag::Vector> printed; // witness rows as listed, F then G
};

inline Witness witness(const bilag::CatalogEntry& e) {
    Witness w;
    w.g = std::make_unique<bilag::LieAlgebra>(e.algebra());
    w.b = bilag::make_bilagrangian(*w.g, *e.symplecticForm,
                                   bilag::make_subspace(*w.g, *e.witnessF),
                                   bilag::make_subspace(*w.g, *e.witnessG));
    w.printed = *e.witnessF;
    w.printed.insert(w.printed.end(), e.witnessG->begin(), e.witnessG->end());
    return w;
}

inline Witness witness(const std::string& name) { return witness(entry(name)); }

} // namespace testutil

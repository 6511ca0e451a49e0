#include "CLI11.hpp"

#include "bilag/catalog.hpp"
#include "bilag/connection.hpp"
#include "bilag/parametric.hpp"
#include "bilag/report.hpp"
#include "bilag/search.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace bilag;

std::string yn(bool b) { return b ? "yes" : "no"; }
std::string verdict_of(bool b) { return b ? "pass" : "fail"; }

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    return ReportFormat::markdown;
}

SearchStrategy parse_strategy(const std::string& s) {
    if (s == "echelonGrid") return SearchStrategy::echelonGrid;
    if (s == "random") return SearchStrategy::random;
    return SearchStrategy::coordinateFirst;
}

std::string stop_string(SearchStop s) {
    switch (s) {
        case SearchStop::found: return "found";
        case SearchStop::budgetExhausted: return "budgetExhausted";
        default: return "gridExhausted";
    }
}

bool has_witness(const CatalogEntry& e) {
    return e.symplecticForm && e.witnessF && e.witnessG;
}

std::vector<Vector> printed_basis(const CatalogEntry& e) {
    std::vector<Vector> b = *e.witnessF;
    b.insert(b.end(), e.witnessG->begin(), e.witnessG->end());
    return b;
}

// ';'-separated list of basis vectors in CLI syntax ("e1;e2-2*e1;-3*e5+e6").
std::vector<Vector> parse_basis_list(const std::string& s, std::size_t dim) {
    std::vector<Vector> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t semi = s.find(';', start);
        const std::string part = s.substr(start, semi - start);
        if (!part.empty()) out.push_back(parse_vector(part, dim));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

std::string basis_string(const std::vector<Vector>& rows) {
    std::string s = "{";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ", ";
        s += serialize_vector(rows[i]);
    }
    return s + "}";
}

std::string betti_string(std::size_t b1, std::size_t b2) {
    return "b1=" + std::to_string(b1) + ", b2=" + std::to_string(b2);
}

bool all_zero(const std::vector<Rational>& xs) {
    for (const auto& x : xs)
        if (x != 0) return false;
    return true;
}

// nabla_{b_i} b_j in e-coordinates.
Vector nabla_vec(const ConnectionTable& ct, std::size_t i, std::size_t j) {
    Vector v(ct.basis[0].size(), Rational(0));
    for (std::size_t k = 0; k < ct.n; ++k)
        if (ct.g(k, i, j) != 0) v = add(v, scale(ct.g(k, i, j), ct.basis[k]));
    return v;
}

// R(b_i, b_j) b_k in e-coordinates.
Vector curv_vec(const CurvatureTensor& t, const ConnectionTable& ct, std::size_t i,
                std::size_t j, std::size_t k) {
    Vector v(ct.basis[0].size(), Rational(0));
    for (std::size_t l = 0; l < t.n; ++l)
        if (t.at(l, i, j, k) != 0) v = add(v, scale(t.at(l, i, j, k), ct.basis[l]));
    return v;
}

struct AxiomChecks {
    bool torsionFree = false, parallelOmega = false;
    bool preservesF = false, preservesG = false;
    bool matchesLeviCivita = false, signatureOk = false, iSquare = false;
    Signature sig;
    bool all() const {
        return torsionFree && parallelOmega && preservesF && preservesG &&
               matchesLeviCivita && signatureOk && iSquare;
    }
};

// ct must list the F vectors first (adapted or printed witness order).
AxiomChecks connection_axioms(const LieAlgebra& g, const BiLagrangianStructure& b,
                              const ConnectionTable& ct) {
    AxiomChecks a;
    a.torsionFree = all_zero(torsion(g, ct));
    a.parallelOmega = all_zero(nabla_omega(ct, b.omega));
    a.preservesF = a.preservesG = true;
    const std::size_t half = b.f.dimension;
    for (std::size_t i = 0; i < ct.n; ++i)
        for (std::size_t j = 0; j < ct.n; ++j) {
            const Vector v = nabla_vec(ct, i, j);
            if (j < half) {
                if (!contains(b.f, v)) a.preservesF = false;
            } else if (!contains(b.g2, v)) {
                a.preservesG = false;
            }
        }
    const ParaKaehlerPair pk = para_kaehler(b);
    a.matchesLeviCivita = levi_civita_on(g, pk.metric, ct.basis).gamma == ct.gamma;
    a.sig = symmetric_signature(pk.metric);
    a.signatureOk = a.sig == Signature{ct.n / 2, ct.n / 2, 0};
    a.iSquare = multiply(pk.iOperator, pk.iOperator) == Matrix::identity(ct.n);
    return a;
}

ReportSection axioms_section(const std::string& title, const LieAlgebra& g,
                             const BiLagrangianStructure& b, const ConnectionTable& ct) {
    const AxiomChecks a = connection_axioms(g, b, ct);
    ReportSection s{title, {}, verdict_of(a.all())};
    s.rows = {{"torsion", a.torsionFree ? "0" : "nonzero"},
              {"nabla omega", a.parallelOmega ? "0" : "nonzero"},
              {"preserves F", yn(a.preservesF)},
              {"preserves G", yn(a.preservesG)},
              {"equals Levi-Civita of g(X,Y) = omega(IX,Y)", yn(a.matchesLeviCivita)},
              {"metric signature", "(" + std::to_string(a.sig.positives) + "," +
                                       std::to_string(a.sig.negatives) + ")"},
              {"I^2 = id", yn(a.iSquare)}};
    return s;
}

ReportSection bilagrangian_section(const std::string& title, const LieAlgebra& g,
                                   const KForm& w, const std::vector<Vector>& fRows,
                                   const std::vector<Vector>& gRows) {
    const BiLagrangianReport r =
        verify_bilagrangian(g, w, make_subspace(g, fRows), make_subspace(g, gRows));
    ReportSection s{title, {}, verdict_of(r.pass())};
    s.rows = {{"omega closed", yn(r.closed)},
              {"omega non-degenerate", yn(r.nonDegenerate)},
              {"F subalgebra", yn(r.fSubalgebra)},
              {"G subalgebra", yn(r.g2Subalgebra)},
              {"F Lagrangian", yn(r.fLagrangian)},
              {"G Lagrangian", yn(r.g2Lagrangian)},
              {"F + G complementary", yn(r.complementary)}};
    return s;
}

ReportSection lemma_section(const std::string& id) {
    const LemmaReport lr = verify_lemma_identity(id);
    ReportSection s{"lemma " + id, {}, verdict_of(lr.pass())};
    for (const auto& c : lr.checks)
        s.rows.push_back({c.label, c.pass ? "ok" : "FAIL: " + c.detail});
    return s;
}

void append_show(Report& rep, const CatalogEntry& e) {
    ReportSection s{e.name, {}, ""};
    s.rows.push_back({"dim", std::to_string(e.dim)});
    for (std::size_t i = 0; i < e.dalphaTokens.size(); ++i)
        s.rows.push_back({"dalpha_" + std::to_string(i + 1), e.dalphaTokens[i]});
    if (e.symplecticForm) {
        s.rows.push_back({"omega", serialize_form(*e.symplecticForm)});
        s.rows.push_back({"omega source", e.formSource});
    }
    if (e.witnessF) s.rows.push_back({"F", basis_string(*e.witnessF)});
    if (e.witnessG) s.rows.push_back({"G", basis_string(*e.witnessG)});
    if (e.expectedFlat) s.rows.push_back({"flat", yn(*e.expectedFlat)});
    if (e.expectedBetti)
        s.rows.push_back({"betti", betti_string(e.expectedBetti->first, e.expectedBetti->second)});
    if (!e.salamonTuple.empty()) s.rows.push_back({"survey tuple", e.salamonTuple});
    if (!e.khakimdjanovNumber.empty())
        s.rows.push_back({"classification number", e.khakimdjanovNumber});
    if (!e.aliasPerm.empty()) {
        std::string p;
        for (std::size_t i = 0; i < e.aliasPerm.size(); ++i) {
            if (i) p += ",";
            p += std::to_string(e.aliasPerm[i]);
        }
        s.rows.push_back({"survey basis map", p});
    }
    rep.sections.push_back(std::move(s));
}

ReportRow betti_row(const CatalogEntry& e, bool& sectionOk) {
    const LieAlgebra g = e.algebra();
    const auto [b1, b2] = betti_numbers(g);
    std::string v = betti_string(b1, b2);
    if (e.expectedBetti && *e.expectedBetti != std::pair(b1, b2)) {
        v += " (listed " + betti_string(e.expectedBetti->first, e.expectedBetti->second) + ")";
        sectionOk = false;
    }
    return {e.name, v};
}

void append_connection(Report& rep, const CatalogEntry& e, bool withCurvature) {
    const LieAlgebra g = e.algebra();
    if (!has_witness(e))
        throw std::invalid_argument("no bi-Lagrangian witness listed for '" + e.name + "'");
    const BiLagrangianStructure b =
        make_bilagrangian(g, *e.symplecticForm, make_subspace(g, *e.witnessF),
                          make_subspace(g, *e.witnessG));
    const ConnectionTable ct = canonical_connection_on(b, printed_basis(e));
    if (!withCurvature) {
        ReportSection s{"canonical connection: " + e.name, {}, ""};
        for (std::size_t i = 0; i < ct.n; ++i)
            for (std::size_t j = 0; j < ct.n; ++j) {
                const Vector v = nabla_vec(ct, i, j);
                if (!is_zero(v))
                    s.rows.push_back({"nabla[" + serialize_vector(ct.basis[i]) + "] " +
                                          serialize_vector(ct.basis[j]),
                                      serialize_vector(v)});
            }
        if (s.rows.empty()) s.rows.push_back({"nabla", "0"});
        rep.sections.push_back(std::move(s));
        rep.sections.push_back(axioms_section("connection axioms: " + e.name, g, b, ct));
        return;
    }
    const CurvatureTensor r = curvature(g, ct);
    const bool flat = r.is_zero();
    ReportSection s{"curvature: " + e.name, {}, ""};
    s.rows.push_back({"flat", yn(flat)});
    if (e.expectedFlat) {
        s.rows.push_back({"flat (listed)", yn(*e.expectedFlat)});
        s.verdict = verdict_of(flat == *e.expectedFlat);
    }
    for (std::size_t i = 0; i < ct.n; ++i)
        for (std::size_t j = i + 1; j < ct.n; ++j)
            for (std::size_t k = 0; k < ct.n; ++k) {
                const Vector v = curv_vec(r, ct, i, j, k);
                if (!is_zero(v))
                    s.rows.push_back({"R[" + serialize_vector(ct.basis[i]) + ", " +
                                          serialize_vector(ct.basis[j]) + "] " +
                                          serialize_vector(ct.basis[k]),
                                      serialize_vector(v)});
            }
    const RicciMatrix rm = ricci(r);
    bool ricciRows = false;
    for (std::size_t i = 0; i < ct.n; ++i)
        for (std::size_t j = 0; j < ct.n; ++j)
            if (rm.ric.at(i, j) != 0) {
                s.rows.push_back({"ric[" + serialize_vector(ct.basis[i]) + ", " +
                                      serialize_vector(ct.basis[j]) + "]",
                                  to_string(rm.ric.at(i, j))});
                ricciRows = true;
            }
    if (!ricciRows) s.rows.push_back({"ricci", "0"});
    rep.sections.push_back(std::move(s));
    const CurvatureIdentities ci = curvature_identities(ct, r, b);
    ReportSection ids{"curvature identities: " + e.name, {},
                      verdict_of(ci.bianchi && ci.leafwiseFlat && ci.sameFoliationSymmetry)};
    ids.rows = {{"first Bianchi", yn(ci.bianchi)},
                {"leafwise flat", yn(ci.leafwiseFlat)},
                {"same-foliation symmetry", yn(ci.sameFoliationSymmetry)}};
    rep.sections.push_back(std::move(ids));
}

void append_tables(Report& rep, const LoadedCatalog& cat) {
    ReportSection wit{"witness verification", {}, "pass"};
    std::size_t witTotal = 0, witPass = 0;
    for (const auto& e : cat.entries) {
        if (!has_witness(e)) continue;
        ++witTotal;
        const LieAlgebra g = e.algebra();
        const BiLagrangianReport r =
            verify_bilagrangian(g, *e.symplecticForm, make_subspace(g, *e.witnessF),
                                make_subspace(g, *e.witnessG));
        if (r.pass()) ++witPass;
        wit.rows.push_back({e.name, verdict_of(r.pass())});
    }
    const std::string witCount = std::to_string(witPass) + "/" + std::to_string(witTotal);
    wit.rows.push_back({"witnesses verified", witCount});
    if (witPass != witTotal) wit.verdict = "fail";
    rep.sections.push_back(std::move(wit));

    ReportSection bet{"Betti numbers (dim 6)", {}, "pass"};
    bool betOk = true;
    std::size_t betTotal = 0;
    for (const auto& e : cat.entries) {
        if (e.dim != 6) continue;
        ++betTotal;
        bet.rows.push_back(betti_row(e, betOk));
    }
    bet.rows.push_back({"rows matching",
                        std::to_string(betOk ? betTotal : 0) + "/" + std::to_string(betTotal)});
    bet.verdict = verdict_of(betOk);
    rep.sections.push_back(std::move(bet));

    ReportSection flats{"flat dichotomy", {}, "pass"};
    ReportSection ricS{"Ricci", {}, "pass"};
    ReportSection axS{"connection axioms", {}, "pass"};
    ReportSection idS{"curvature identities", {}, "pass"};
    std::size_t flat6 = 0, nonflat6 = 0, flat4 = 0, flat2 = 0;
    std::size_t ricZero6 = 0, wit6 = 0, axPass = 0, idPass = 0;
    bool flatOk = true, ricOk = true;
    for (const auto& e : cat.entries) {
        if (!has_witness(e)) continue;
        const LieAlgebra g = e.algebra();
        const BiLagrangianStructure b =
            make_bilagrangian(g, *e.symplecticForm, make_subspace(g, *e.witnessF),
                              make_subspace(g, *e.witnessG));
        const ConnectionTable ct = canonical_connection(b);
        const CurvatureTensor r = curvature(g, ct);
        const bool flat = r.is_zero();
        if (e.dim == 6) (flat ? flat6 : nonflat6)++;
        if (e.dim == 4 && flat) ++flat4;
        if (e.dim == 2 && flat) ++flat2;
        std::string v = flat ? "flat" : "non-flat";
        if (e.expectedFlat && *e.expectedFlat != flat) {
            v += " (listed " + std::string(*e.expectedFlat ? "flat" : "non-flat") + ")";
            flatOk = false;
        }
        flats.rows.push_back({e.name, v});

        const RicciMatrix rm = ricci(r);
        const bool rzero = rm.ric == Matrix(ct.n, ct.n);
        if (e.dim == 6) {
            ++wit6;
            if (rzero) ++ricZero6;
        }
        if (!rzero) ricOk = false;
        ricS.rows.push_back({e.name, rzero ? "0" : "nonzero"});

        const AxiomChecks a = connection_axioms(g, b, ct);
        if (a.all()) ++axPass;
        axS.rows.push_back({e.name, a.all() ? "ok" : "fail"});

        const CurvatureIdentities ci = curvature_identities(ct, r, b);
        const bool idOk = ci.bianchi && ci.leafwiseFlat && ci.sameFoliationSymmetry;
        if (idOk) ++idPass;
        idS.rows.push_back({e.name, idOk ? "ok" : "fail"});
    }
    const std::string flatCount = "dim 6: " + std::to_string(flat6) + " flat + " +
                                  std::to_string(nonflat6) + " non-flat; dim 4: " +
                                  std::to_string(flat4) + " flat; dim 2: " +
                                  std::to_string(flat2) + " flat";
    flats.rows.push_back({"counts", flatCount});
    flats.verdict = verdict_of(flatOk);
    rep.sections.push_back(std::move(flats));
    const std::string ricCount = std::to_string(ricZero6) + "/" + std::to_string(wit6);
    ricS.rows.push_back({"dim-6 Ricci-flat", ricCount});
    ricS.verdict = verdict_of(ricOk);
    rep.sections.push_back(std::move(ricS));
    axS.rows.push_back({"axioms verified", std::to_string(axPass) + "/" + std::to_string(witTotal)});
    axS.verdict = verdict_of(axPass == witTotal);
    rep.sections.push_back(std::move(axS));
    idS.rows.push_back({"identities verified",
                        std::to_string(idPass) + "/" + std::to_string(witTotal)});
    idS.verdict = verdict_of(idPass == witTotal);
    rep.sections.push_back(std::move(idS));

    ReportSection lem{"lemma identities", {}, "pass"};
    std::size_t lemTotal = 0, lemPass = 0;
    for (const auto& id : lemma_ids()) {
        ++lemTotal;
        const LemmaReport lr = verify_lemma_identity(id);
        if (lr.pass()) ++lemPass;
        lem.rows.push_back({id, verdict_of(lr.pass())});
    }
    const std::string lemCount = std::to_string(lemPass) + "/" + std::to_string(lemTotal);
    lem.rows.push_back({"lemmas verified", lemCount});
    lem.verdict = verdict_of(lemPass == lemTotal);
    rep.sections.push_back(std::move(lem));

    const bool allOk = witPass == witTotal && betOk && flatOk && ricOk &&
                       axPass == witTotal && idPass == witTotal && lemPass == lemTotal;
    ReportSection sum{"summary", {}, verdict_of(allOk)};
    sum.rows = {{"witnesses", witCount + " verified"},
                {"flat dichotomy", flatCount},
                {"dim-6 Ricci-flat", ricCount},
                {"lemma identities", lemCount + " pass"}};
    rep.sections.push_back(std::move(sum));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of bi-Lagrangian structures on nilpotent Lie algebras"};
    app.require_subcommand(1);
    std::string format = "md", catalogPath;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
    app.add_option("--catalog", catalogPath, "catalog file to load instead of the builtin tables");

    auto* listCmd = app.add_subcommand("list", "list catalog entries");
    listCmd->fallthrough();

    std::string showName;
    auto* showCmd = app.add_subcommand("show", "print one catalog entry");
    showCmd->fallthrough();
    showCmd->add_option("name", showName, "entry name or alias")->required();

    std::string bettiName;
    bool bettiAll = false;
    auto* bettiCmd = app.add_subcommand("betti", "Betti numbers b1, b2");
    bettiCmd->fallthrough();
    bettiCmd->add_option("name", bettiName, "entry name or alias");
    bettiCmd->add_flag("--all", bettiAll, "whole six-dimensional table");

    std::string checkName, checkOmega, checkF, checkG;
    auto* checkCmd = app.add_subcommand("check", "verify a bi-Lagrangian structure");
    checkCmd->fallthrough();
    checkCmd->add_option("name", checkName, "entry name or alias")->required();
    checkCmd->add_option("--omega", checkOmega, "2-form, e.g. 13+26-45 (defaults to the listed one)");
    checkCmd->add_option("--f", checkF, "first Lagrangian basis, vectors separated by ';'");
    checkCmd->add_option("--g", checkG, "second Lagrangian basis");

    std::string connName;
    auto* connCmd = app.add_subcommand("connection", "canonical connection on the listed witness");
    connCmd->fallthrough();
    connCmd->add_option("name", connName, "entry name or alias")->required();

    std::string curvName;
    auto* curvCmd =
        app.add_subcommand("curvature", "curvature, Ricci, and identities of the canonical connection");
    curvCmd->fallthrough();
    curvCmd->add_option("name", curvName, "entry name or alias")->required();

    std::string lemmaId;
    auto* lemmaCmd = app.add_subcommand("lemmas", "re-verify the displayed bracket and Pfaffian identities");
    lemmaCmd->fallthrough();
    lemmaCmd->add_option("--id", lemmaId, "single lemma id");

    std::string searchName, searchOmega, searchStrategy = "coordinateFirst";
    std::uint64_t searchSeed = 0, searchBudget = 200000;
    unsigned searchHeight = 1;
    auto* searchCmd = app.add_subcommand("search", "budgeted bi-Lagrangian witness search");
    searchCmd->fallthrough();
    searchCmd->add_option("name", searchName, "entry name or alias")->required();
    searchCmd->add_option("--omega", searchOmega, "2-form (defaults to the listed one)");
    searchCmd->add_option("--seed", searchSeed, "seed for strategy random");
    searchCmd->add_option("--budget", searchBudget, "max candidates evaluated");
    searchCmd->add_option("--height", searchHeight, "max |p|, q over trial coefficients p/q");
    searchCmd->add_option("--strategy", searchStrategy, "candidate stream")
        ->check(CLI::IsMember({"coordinateFirst", "echelonGrid", "random"}));

    auto* tablesCmd = app.add_subcommand("verify-tables", "re-verify every catalog table");
    tablesCmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const LoadedCatalog cat = catalogPath.empty() ? load_catalog() : load_catalog(catalogPath);
        Report rep;
        if (!cat.flagged.empty()) {
            ReportSection s{"catalog problems", {}, "fail"};
            for (const auto& [name, what] : cat.flagged) s.rows.push_back({name, what});
            rep.sections.push_back(std::move(s));
        }

        if (*listCmd) {
            ReportSection s{"catalog", {}, ""};
            for (const auto& e : cat.entries) {
                std::string v = "dim " + std::to_string(e.dim);
                if (!e.khakimdjanovNumber.empty()) v += "; K" + e.khakimdjanovNumber;
                v += "; witness " + yn(has_witness(e));
                if (e.expectedFlat) v += std::string("; ") + (*e.expectedFlat ? "flat" : "non-flat");
                s.rows.push_back({e.name, v});
            }
            rep.sections.push_back(std::move(s));
        } else if (*showCmd) {
            append_show(rep, entry(cat, showName));
        } else if (*bettiCmd) {
            if (bettiAll == !bettiName.empty())
                throw std::invalid_argument("betti: give an entry name or --all");
            ReportSection s{"Betti numbers", {}, "pass"};
            bool ok = true;
            if (bettiAll) {
                for (const auto& e : cat.entries)
                    if (e.dim == 6) s.rows.push_back(betti_row(e, ok));
            } else {
                s.rows.push_back(betti_row(entry(cat, bettiName), ok));
            }
            s.verdict = verdict_of(ok);
            rep.sections.push_back(std::move(s));
        } else if (*checkCmd) {
            const CatalogEntry& e = entry(cat, checkName);
            const LieAlgebra g = e.algebra();
            if (checkF.empty() != checkG.empty())
                throw std::invalid_argument("check: --f and --g must be supplied together");
            std::optional<KForm> w = e.symplecticForm;
            if (!checkOmega.empty()) w = parse_salamon_token(checkOmega, g.dim);
            if (!w) throw std::invalid_argument("check: no 2-form listed for '" + e.name +
                                                "'; supply --omega");
            std::optional<std::vector<Vector>> fRows = e.witnessF, gRows = e.witnessG;
            if (!checkF.empty()) {
                fRows = parse_basis_list(checkF, g.dim);
                gRows = parse_basis_list(checkG, g.dim);
            }
            if (fRows && gRows) {
                rep.sections.push_back(
                    bilagrangian_section("bi-Lagrangian check: " + e.name, g, *w, *fRows, *gRows));
            } else {
                const SymplecticVerdict v = is_symplectic(g, *w);
                ReportSection s{"symplectic check: " + e.name, {}, verdict_of(v == SymplecticVerdict::yes)};
                s.rows = {{"omega", serialize_form(*w)},
                          {"symplectic", v == SymplecticVerdict::yes ? "yes"
                           : v == SymplecticVerdict::notClosed      ? "no (not closed)"
                                                                    : "no (degenerate)"}};
                rep.sections.push_back(std::move(s));
            }
        } else if (*connCmd) {
            append_connection(rep, entry(cat, connName), false);
        } else if (*curvCmd) {
            append_connection(rep, entry(cat, curvName), true);
        } else if (*lemmaCmd) {
            if (!lemmaId.empty()) {
                rep.sections.push_back(lemma_section(lemmaId));
            } else {
                for (const auto& id : lemma_ids()) rep.sections.push_back(lemma_section(id));
            }
        } else if (*searchCmd) {
            const CatalogEntry& e = entry(cat, searchName);
            const LieAlgebra g = e.algebra();
            std::optional<KForm> w = e.symplecticForm;
            if (!searchOmega.empty()) w = parse_salamon_token(searchOmega, g.dim);
            if (!w) throw std::invalid_argument("search: no 2-form listed for '" + e.name +
                                                "'; supply --omega");
            SearchConfig cfg;
            cfg.seed = searchSeed;
            cfg.budget = searchBudget;
            cfg.coefficientHeight = searchHeight;
            cfg.strategy = parse_strategy(searchStrategy);
            const SearchOutcome out = search_bilagrangian(g, *w, cfg);
            ReportSection s{"search: " + e.name, {}, out.found ? "pass" : ""};
            s.rows = {{"omega", serialize_form(*w)},
                      {"strategy", searchStrategy},
                      {"height", std::to_string(cfg.coefficientHeight)},
                      {"budget", std::to_string(cfg.budget)},
                      {"seed", std::to_string(cfg.seed)},
                      {"outcome", stop_string(out.stop)},
                      {"candidates tried", std::to_string(out.candidatesTried)},
                      {"rejected: not a subalgebra", std::to_string(out.filterStats.notSubalgebra)},
                      {"rejected: bracket-dimension filter", std::to_string(out.filterStats.lemma21Filter)},
                      {"rejected: not Lagrangian", std::to_string(out.filterStats.notLagrangian)},
                      {"F without complement", std::to_string(out.filterStats.noComplement)}};
            if (out.found) {
                s.rows.push_back({"F", basis_string(out.found->f.basis)});
                s.rows.push_back({"G", basis_string(out.found->g2.basis)});
            }
            rep.sections.push_back(std::move(s));
        } else if (*tablesCmd) {
            append_tables(rep, cat);
        }

        std::cout << render(rep, parse_format(format));
        return rep.all_pass() ? 0 : 1;
    } catch (const CatalogParseError& e) {
        std::cerr << "error: " << e.message;
        if (e.line) std::cerr << " (line " << e.line << ", column " << e.column << ")";
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

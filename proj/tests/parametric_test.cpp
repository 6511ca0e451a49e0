#include "bilag/parametric.hpp"

#include "bilag/exterior.hpp"
#include "bilag/symplectic.hpp"
#include "doctest.h"
#include "test_util.hpp"

#include <map>
#include <string>
#include <vector>

using namespace bilag;

namespace {

ParamPoly var(const std::string& name) { return ParamPoly::variable(name); }

// Antisymmetric gram with polynomial entries; pairs are 0-based (i, j, value).
ParamGram gram_of(std::size_t n,
                  std::initializer_list<std::tuple<int, int, ParamPoly>> entries) {
    ParamGram m;
    m.n = n;
    m.a.assign(n * n, ParamPoly{});
    for (const auto& [i, j, p] : entries) {
        m.at(i, j) = p;
        m.at(j, i) = negate(p);
    }
    return m;
}

} // namespace

TEST_CASE("ParamPoly arithmetic and printing") {
    // intern in a fixed order so the term order below is deterministic
    ParamPoly::var_id("s");
    ParamPoly::var_id("t");
    const ParamPoly s = var("s"), t = var("t");
    CHECK(to_string(ParamPoly::constant(rat(0))) == "0");
    CHECK(to_string(ParamPoly::constant(rat(-5, 2))) == "-5/2");
    CHECK(to_string(s) == "s");
    CHECK(to_string(negate(s)) == "-s");
    CHECK(to_string(scale(rat(3), s)) == "3*s");
    CHECK(to_string(mul(s, s)) == "s^2");
    CHECK(to_string(add(ParamPoly::constant(rat(1)), add(s, t))) == "1 + s + t");
    CHECK(to_string(sub(mul(s, t), mul(s, s))) == "-s^2 + s*t");
    // ring identities
    CHECK(mul(add(s, t), sub(s, t)) == sub(mul(s, s), mul(t, t)));
    CHECK(sub(add(s, t), add(t, s)).is_zero());
    CHECK(mul(s, ParamPoly::constant(rat(0))).is_zero());
    CHECK(scale(rat(1, 2), add(s, s)) == s);
}

TEST_CASE("substitute is partial evaluation") {
    const ParamPoly s = var("s"), t = var("t");
    const ParamPoly p = add(mul(s, mul(s, t)), scale(rat(2), t)); // s^2 t + 2t
    CHECK(substitute(p, {{"s", rat(3)}}) == scale(rat(11), t));
    CHECK(substitute(p, {{"s", rat(3)}, {"t", rat(-1)}}) ==
          ParamPoly::constant(rat(-11)));
    CHECK(substitute(p, {{"t", rat(0)}}).is_zero());
    CHECK(substitute(p, {}) == p);
}

TEST_CASE("parametric_bracket reproduces a displayed identity symbolically") {
    const LieAlgebra g = testutil::algebra("L4"); // [e1,e2]=-e3, [e1,e3]=-e4
    ParamVector f1{{ParamPoly::constant(rat(1)), var("a2"), var("a3"), var("a4")}};
    ParamVector f2{{ParamPoly{}, var("b2"), var("b3"), var("b4")}};
    const ParamVector out = parametric_bracket(g, f1, f2);
    CHECK(out.coords[0].is_zero());
    CHECK(out.coords[1].is_zero());
    CHECK(out.coords[2] == negate(var("b2")));
    CHECK(out.coords[3] == negate(var("b3")));
    CHECK(param_is_zero(parametric_bracket(g, f2, f2)));
}

TEST_CASE("parametric_pfaffian: generic 4x4 and odd dimension") {
    const ParamGram m = gram_of(4, {{0, 1, var("w12")},
                                    {0, 2, var("w13")},
                                    {0, 3, var("w14")},
                                    {1, 2, var("w23")},
                                    {1, 3, var("w24")},
                                    {2, 3, var("w34")}});
    const ParamPoly expected = add(sub(mul(var("w12"), var("w34")),
                                       mul(var("w13"), var("w24"))),
                                   mul(var("w14"), var("w23")));
    const ParamPoly pf = parametric_pfaffian(m);
    CHECK(pf == expected);
    CHECK(mul(pf, pf) == parametric_determinant(m));
    ParamGram odd;
    odd.n = 3;
    odd.a.assign(9, ParamPoly{});
    CHECK_THROWS_AS((void)parametric_pfaffian(odd), std::invalid_argument);
}

TEST_CASE("closed-family Pfaffians of the filiform-type families") {
    // L6,18: closed forms are w12 a12 + w13 a13 + w23 a23 + w14 a14 + w34 a34
    //        + w15 a15 - w34 a25 + w16 a16
    const ParamPoly w16 = var("w16"), w34 = var("w34");
    const ParamGram m18 = gram_of(6, {{0, 1, var("w12")},
                                      {0, 2, var("w13")},
                                      {1, 2, var("w23")},
                                      {0, 3, var("w14")},
                                      {2, 3, w34},
                                      {0, 4, var("w15")},
                                      {1, 4, negate(w34)},
                                      {0, 5, w16}});
    const ParamPoly pf18 = parametric_pfaffian(m18);
    CHECK(pf18 == negate(mul(w16, mul(w34, w34))));
    CHECK(mul(pf18, pf18) == parametric_determinant(m18));
    CHECK(substitute(pf18, {{"w16", rat(0)}}).is_zero());

    // L6,21: ... + w24 a15 + (w16 - w34) a25 + w16 a16
    const ParamGram m21 = gram_of(6, {{0, 1, var("w12")},
                                      {0, 2, var("w13")},
                                      {1, 2, var("w23")},
                                      {0, 3, var("w14")},
                                      {1, 3, var("w24")},
                                      {2, 3, w34},
                                      {0, 4, var("w24")},
                                      {1, 4, sub(w16, w34)},
                                      {0, 5, w16}});
    const ParamPoly pf21 = parametric_pfaffian(m21);
    CHECK(pf21 == sub(mul(mul(w16, w16), w34), mul(w16, mul(w34, w34))));
    CHECK(substitute(pf21, {{"w16", rat(0)}}).is_zero());
    // the listed form 2*a16 + a25 + a34 sits at w16=2, w34=1: Pf = 2
    CHECK(substitute(pf21, {{"w16", rat(2)}, {"w34", rat(1)}}) ==
          ParamPoly::constant(rat(2)));
}

TEST_CASE("numeric Pfaffian of each listed form matches its recorded value") {
    const std::map<std::string, Rational> expected = {
        {"L4", rat(1)},     {"L4+A2", rat(1)},  {"L6,13", rat(1)},
        {"L6,14", rat(1)},  {"L6,15", rat(1)},  {"L6,17-", rat(1)},
        {"L6,18", rat(-1)}, {"L6,19", rat(-1)}, {"L6,21", rat(2)},
    };
    for (const auto& [name, value] : expected) {
        const auto& e = testutil::entry(name);
        REQUIRE(e.symplecticForm.has_value());
        const Matrix gm = gram_matrix(*e.symplecticForm, e.dim);
        ParamGram pg;
        pg.n = e.dim;
        pg.a.assign(e.dim * e.dim, ParamPoly{});
        for (std::size_t i = 0; i < e.dim; ++i)
            for (std::size_t j = 0; j < e.dim; ++j)
                pg.a[i * e.dim + j] = ParamPoly::constant(gm.at(i, j));
        CHECK_MESSAGE(parametric_pfaffian(pg) == ParamPoly::constant(value), name);
        // nonzero Pfaffian together with closedness is exactly "symplectic"
        CHECK_MESSAGE(is_symplectic(e.algebra(), *e.symplecticForm) ==
                          SymplecticVerdict::yes,
                      name);
    }
}

TEST_CASE("every lemma identity verifies") {
    const std::vector<std::string> expectedIds = {
        "L4_eq",         "L4_symp",        "L4A2_eq",       "L4A2_symp",
        "L6_13_eq",      "L6_13_symp",     "L6_13_prop",    "L5_6A1_eq",
        "L5_6A1_prop",   "L6_14_eq",       "L6_14_symp",    "L6_14_prop",
        "L6_15_eq",      "L6_15_symp",     "L6_17p_eq",     "L6_17p_prop",
        "L6_17m_eq",     "L6_17m_symp",    "L6_17m_lagr",   "L6_17m_lagr_c",
        "L6_17m_lagr_d", "L6_17m_prop",    "L6_18_series",  "L6_19_series",
        "L6_21_series",  "L6_18_symp",     "L6_19_symp",    "L6_21_symp",
    };
    CHECK(lemma_ids() == expectedIds);
    std::size_t totalChecks = 0;
    for (const auto& id : lemma_ids()) {
        const LemmaReport rep = verify_lemma_identity(id);
        CHECK(rep.lemmaId == id);
        CHECK_MESSAGE(rep.pass(), id);
        for (const auto& c : rep.checks) {
            CHECK_FALSE(c.label.empty());
            CHECK_MESSAGE(c.detail.empty(), id, ": ", c.label, ": ", c.detail);
        }
        totalChecks += rep.checks.size();
    }
    CHECK(totalChecks == 80);
}

TEST_CASE("unknown lemma id throws") {
    CHECK_THROWS_AS((void)verify_lemma_identity("L9_99_symp"), std::invalid_argument);
}

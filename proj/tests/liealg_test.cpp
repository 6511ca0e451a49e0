#include "bilag/liealg.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bilag;
using testutil::algebra;
using testutil::vec;
using testutil::vecs;

TEST_CASE("pair_index enumerates i<j lexicographically") {
    CHECK(LieAlgebra::pair_index(4, 0, 1) == 0);
    CHECK(LieAlgebra::pair_index(4, 0, 2) == 1);
    CHECK(LieAlgebra::pair_index(4, 0, 3) == 2);
    CHECK(LieAlgebra::pair_index(4, 1, 2) == 3);
    CHECK(LieAlgebra::pair_index(4, 2, 3) == 5);
}

TEST_CASE("structure constant sign convention: dalpha_3 = alpha_12 means [e1,e2] = -e3") {
    const LieAlgebra g = algebra("L4"); // dalpha 0,0,12,13
    CHECK(bracket(g, vec(4, "e1"), vec(4, "e2")) == vec(4, "-e3"));
    CHECK(bracket(g, vec(4, "e2"), vec(4, "e1")) == vec(4, "e3"));
    CHECK(bracket(g, vec(4, "e1"), vec(4, "e3")) == vec(4, "-e4"));
    CHECK(g.structure_constant(2, 0, 1) == rat(-1));
    CHECK(g.structure_constant(2, 1, 0) == rat(1));
    // the A1 summand of L3+A1 sits at e3, so the Heisenberg relation lands on e4
    const LieAlgebra h = algebra("L3+A1"); // dalpha 0,0,0,12
    CHECK(bracket(h, vec(4, "e1"), vec(4, "e2")) == vec(4, "-e4"));
    CHECK(h.structure_constant(3, 0, 1) == rat(-1));
}

TEST_CASE("bracket is bilinear and alternating") {
    const LieAlgebra g = algebra("L6,12");
    const Vector x = vec(6, "e2-2*e1"), y = vec(6, "e3-e4");
    CHECK(is_zero(bracket(g, x, x)));
    CHECK(bracket(g, x, y) == scale(rat(-1), bracket(g, y, x)));
    const Vector lhs = bracket(g, add(x, scale(rat(3, 2), y)), y);
    CHECK(lhs == bracket(g, x, y));
    CHECK_THROWS_AS((void)bracket(g, vec(6, "e1"), Vector(4, rat(0))), std::invalid_argument);
}

TEST_CASE("Jacobi holds on every catalog algebra and detects violations") {
    for (const auto& e : testutil::catalog().entries) {
        const LieAlgebra g = e.algebra();
        CHECK(check_jacobi(g).pass);
    }
    // [e1,e2]=e3, [e2,e3]=e4, [e1,e4]=e5: the cyclic sum over (e1,e2,e3) is -e5.
    LieAlgebra bad;
    bad.dim = 5;
    bad.c.assign(5, std::vector<Rational>(10, rat(0)));
    bad.c[2][LieAlgebra::pair_index(5, 0, 1)] = rat(1); // [e1,e2]=e3
    bad.c[3][LieAlgebra::pair_index(5, 1, 2)] = rat(1); // [e2,e3]=e4
    bad.c[4][LieAlgebra::pair_index(5, 0, 3)] = rat(1); // [e1,e4]=e5
    const JacobiReport r = check_jacobi(bad);
    CHECK(!r.pass);
    CHECK(r.violatingTriple == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("lower central series descends to zero on nilpotent algebras") {
    CHECK(lower_central_series(algebra("A6")) == std::vector<std::size_t>{6, 0});
    CHECK(lower_central_series(algebra("L3+A1")) == std::vector<std::size_t>{4, 1, 0});
    CHECK(lower_central_series(algebra("L6,21")) == std::vector<std::size_t>{6, 4, 3, 2, 1, 0});
}

TEST_CASE("make_subspace echelonizes and drops dependent rows") {
    const LieAlgebra g = algebra("A6");
    const Subspace s = make_subspace(g, vecs(6, {"e1+e2", "2*e1+2*e2", "e3"}));
    CHECK(s.dimension == 2);
    CHECK(s.pivots == std::vector<std::size_t>{0, 2});
    CHECK(contains(s, vec(6, "e1+e2")));
    CHECK(contains(s, vec(6, "e1+e2+5*e3")));
    CHECK(!contains(s, vec(6, "e1")));
    CHECK(subspace_equal(s, make_subspace(g, vecs(6, {"e3", "-e1-e2"}))));
}

TEST_CASE("is_subalgebra") {
    const LieAlgebra g = algebra("L6,12"); // [e1,e2]=-e4, [e2,e3]=-e5, ...
    CHECK(is_subalgebra(make_subspace(g, vecs(6, {"e2", "e3", "e5"}))));
    CHECK(!is_subalgebra(make_subspace(g, vecs(6, {"e1", "e2"}))));
    CHECK(is_subalgebra(make_subspace(g, vecs(6, {"e4", "e5", "e6"}))));
}

TEST_CASE("nilpotent_subalgebra_filter: bound and 3-dim bracket condition") {
    const LieAlgebra g = algebra("L6,18"); // dalpha 12,13,14,15 pattern
    // span{e1,e2,e3} has bracket span {e4,e5} of dim 2 > 3-2 = 1.
    CHECK(!nilpotent_subalgebra_filter(make_subspace(g, vecs(6, {"e1", "e2", "e3"}))));
    CHECK(nilpotent_subalgebra_filter(make_subspace(g, vecs(6, {"e4", "e5", "e6"}))));
    // dim <= 1 passes vacuously.
    CHECK(nilpotent_subalgebra_filter(make_subspace(g, vecs(6, {"e1"}))));
    // every actual subalgebra passes (necessary-condition property).
    CHECK(nilpotent_subalgebra_filter(make_subspace(g, vecs(6, {"e2", "e4", "e5", "e6"}))));
}

TEST_CASE("disjoint echelon pivots imply complementarity") {
    const LieAlgebra g = algebra("A6");
    const Subspace f = make_subspace(g, vecs(6, {"e1+e4", "e2-e6", "e3+e5"}));
    const Subspace h = make_subspace(g, vecs(6, {"e1+e5", "e4", "e6"}));
    CHECK(f.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(h.pivots == std::vector<std::size_t>{0, 3, 5});
    // shared pivot 0 but still complementary: pivot disjointness is sufficient,
    // not necessary.
    CHECK(is_complementary(f, h));
    const Subspace k = make_subspace(g, vecs(6, {"e4", "e5", "e6"}));
    CHECK(is_complementary(f, k)); // disjoint pivots {0,1,2} vs {3,4,5}
    CHECK(!is_complementary(f, f));
}

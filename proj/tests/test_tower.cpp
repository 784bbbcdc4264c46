#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "towerlab/tower/calculus.hpp"

using namespace towerlab;
using namespace towerlab::tower;

namespace {

ParamPoly P(const char* s) { return ParamPoly::parse(s); }

PolyVec vec(std::initializer_list<long> xs) {
    PolyVec v;
    for (long x : xs) v.push_back(ParamPoly(x));
    return v;
}

SpacePtr point() { return Space::formal_base("pt", {}, ParamPoly(0), PolyVec{}); }

// The incidence divisor inside P(Q) x_{P(T)} P(Q), T trivial of rank 2n.
struct JzTower {
    SpacePtr pt, pt_bundle, p1, p2, fp, jz;
    JzTower() {
        pt = point();
        FormalBundle t = trivial_bundle(pt, P("2n"));
        pt_bundle = Space::proj_bundle("PT", t, "x1");
        FormalBundle l = tautological_sub(pt_bundle);
        FormalBundle lperp = kernel(pull_bundle(t, pt_bundle), dual(l));
        FormalBundle q = quotient(lperp, l);
        p1 = Space::proj_bundle("P1", q, "x2");
        p2 = Space::proj_bundle("P2", q, "x3");
        fp = Space::fiber_product("FP", p1, p2, pt_bundle);
        jz = Space::divisor_in("JZ", gen(fp, "x2") + gen(fp, "x3"));
    }
};

}  // namespace

TEST_CASE("projective space over a point has K = -(r) H") {
    auto pt = point();
    for (long r = 2; r <= 6; ++r) {
        auto pr = Space::proj_bundle("P", trivial_bundle(pt, ParamPoly(r)), "H");
        CHECK(pr->dim() == ParamPoly(r - 1));
        CHECK(canonical_class(pr).coords == vec({-r}));
    }
}

TEST_CASE("blow-up of P2 at a point") {
    auto p2 = Space::proj_bundle("P2", trivial_bundle(point(), ParamPoly(3)), "H");
    auto bl = Space::blow_up("Bl", p2, CenterSpec{ParamPoly(2), std::nullopt}, "E", 1);
    CHECK(bl->dim() == ParamPoly(2));
    CHECK(canonical_class(bl).coords == vec({-3, 1}));
}

TEST_CASE("Euler sequence conventions") {
    auto g = Space::formal_base("G", {"g"}, ParamPoly(5));
    FormalBundle b(ParamPoly(3), DivClass(g, vec({-1})));
    auto pb = Space::proj_bundle("Pb", b, "h");
    FormalBundle t = relative_tangent(pb);
    CHECK(t.rank == ParamPoly(2));
    CHECK(t.c1.coords == vec({-1, 3}));
    CHECK(tautological_sub(pb).c1.coords == vec({0, -1}));
    auto pk = Space::proj_bundle("Pk", t, "k");
    CHECK(relative_cotangent_class(pk).coords == vec({1, -3, -2}));
}

TEST_CASE("Chern class rules on random formal bundles") {
    auto base = Space::formal_base("B", {"a", "b"}, ParamPoly(10));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-4, 4), r(1, 5);
    for (int t = 0; t < 100; ++t) {
        long ra = r(rng), rb = r(rng);
        FormalBundle x(ParamPoly(ra), DivClass(base, vec({c(rng), c(rng)})));
        FormalBundle y(ParamPoly(rb), DivClass(base, vec({c(rng), c(rng)})));
        CHECK(dual(dual(x)).c1 == x.c1);
        FormalBundle xy = tensor(x, y);
        CHECK(xy.rank == ParamPoly(ra * rb));
        CHECK(xy.c1 == ParamPoly(rb) * x.c1 + ParamPoly(ra) * y.c1);
        FormalBundle s = extension(x, y);
        CHECK(quotient(s, x).c1 == y.c1);
        CHECK(kernel(s, y).c1 == x.c1);
        CHECK(sym2(x).rank == ParamPoly(ra * (ra + 1) / 2));
        CHECK(sym2(x).c1 == ParamPoly(ra + 1) * x.c1);
        CHECK(wedge_top(x).c1 == x.c1);
        DivClass m(base, vec({c(rng), c(rng)}));
        CHECK(tensor_line(x, m).c1 == x.c1 + ParamPoly(ra) * m);
        CHECK(untwisted_tautological(twisted_tautological(x.c1, m), m) == x.c1);
    }
    CHECK_THROWS_AS(quotient(FormalBundle(ParamPoly(1), zero_class(base)), FormalBundle(ParamPoly(2), zero_class(base))),
                    ContractError);
}

TEST_CASE("JZ tower: dimensions and canonical classes") {
    JzTower t;
    CHECK(t.pt_bundle->dim() == P("2n-1"));
    CHECK(t.fp->dim() == P("6n-7"));
    CHECK(t.jz->dim() == P("6n-8"));
    CHECK(t.jz->basis() == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(canonical_class(t.jz).coords == PolyVec{P("-2n"), P("3-2n"), P("3-2n")});
    DivClass k = ambient_canonical(t.jz, line_bundle(DivClass(t.jz, vec({-1, 0, 0}))));
    CHECK(k.coords == PolyVec{P("1-2n"), P("3-2n"), P("3-2n")});
}

TEST_CASE("pullbacks compose along the construction DAG") {
    JzTower t;
    PullbackMap direct = tower_pullback(t.pt_bundle, t.jz);
    PullbackMap two = compose(tower_pullback(t.pt_bundle, t.p1), compose(tower_pullback(t.p1, t.fp), tower_pullback(t.fp, t.jz)));
    CHECK(direct.matrix == two.matrix);
    PullbackMap f = tower_pullback(t.fp, t.jz);
    PullbackMap round = compose(f, inverse(f));
    CHECK(round.matrix == identity_map(t.fp).matrix);
    CHECK(is_ancestor(t.pt, t.jz));
    CHECK_FALSE(is_ancestor(t.p2, t.p1));
    CHECK_THROWS_AS(tower_pullback(t.p2, t.p1), ContractError);
}

TEST_CASE("diagonal of a fiber square") {
    JzTower t;
    PullbackMap d = diagonal_restriction(t.fp);
    CHECK(d.target.get() == t.p1.get());
    CHECK(pullback(d, gen(t.fp, "x3")) == gen(t.p1, "x2"));
    DivClass ideal = diagonal_ideal(t.fp);
    // symmetric in the two factors, restricting to the relative cotangent class
    CHECK(ideal.coords[1] == ideal.coords[2]);
    CHECK(pullback(d, ideal) == relative_cotangent_class(t.p1));
}

TEST_CASE("space mismatches are rejected") {
    JzTower t;
    CHECK_THROWS_AS(gen(t.p1, "x2") + gen(t.p2, "x3"), SpaceMismatch);
    CHECK_THROWS_AS(DivClass(t.jz, vec({1, 2})), DimensionMismatch);
    CHECK_THROWS(gen(t.p1, "x9"));
    CHECK_THROWS_AS(exceptional_restriction(t.jz), ContractError);
}

TEST_CASE("transport drops named generators before landing") {
    auto pt = point();
    auto a = Space::formal_base("A", {"u", "v", "w"}, ParamPoly(3));
    auto b = Space::formal_base("B", {"u", "v"}, ParamPoly(2));
    PullbackMap swap = map_from_columns(a, a, {gen(a, "v"), gen(a, "u"), gen(a, "w")});
    DivClass d = transport_class(gen(a, "u") + gen(a, "w"), {{swap, true}}, {"w"}, b);
    CHECK(d.coords == vec({0, 1}));
}

TEST_CASE("cohomology of P2 x P2 matches the Cech oracle") {
    for (long a = -4; a <= 3; ++a)
        for (long b = -4; b <= 3; ++b)
            for (int q = 0; q <= 4; ++q) CHECK(coh_dim_product_proj(a, b, q) == oracle::cech_p2xp2(a, b, q));
    for (long d = -5; d <= 4; ++d)
        for (int q = 0; q <= 2; ++q) CHECK(coh_dim_p2(d, q) == oracle::cech_p2(d, q));
}

TEST_CASE("isotropic Grassmannian dimension") {
    // LG(2, 4) has dimension 3, isotropic lines in a 2m-space have dimension 2m - 1
    CHECK(isotropic_grassmannian_dim(2, ParamPoly(4)) == ParamPoly(3));
    CHECK(isotropic_grassmannian_dim(1, P("2n")) == P("2n-1"));
}

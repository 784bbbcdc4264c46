#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "towerlab/curves/cone.hpp"
#include "towerlab/curves/mori_chain.hpp"

using namespace towerlab;
using namespace towerlab::curves;
using tower::Space;

namespace {

PolyVec vec(std::initializer_list<long> xs) {
    PolyVec v;
    for (long x : xs) v.push_back(ParamPoly(x));
    return v;
}

RatVec rvec(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

// P^1 x P^1 as a fiber product over a point, with its two rulings.
struct Quadric {
    tower::SpacePtr pt, a, b, q;
    Quadric() {
        pt = Space::formal_base("pt", {}, ParamPoly(0), PolyVec{});
        a = Space::proj_bundle("A", tower::trivial_bundle(pt, ParamPoly(2)), "h1");
        b = Space::proj_bundle("B", tower::trivial_bundle(pt, ParamPoly(2)), "h2");
        q = Space::fiber_product("Q", a, b, pt);
    }
};

const Cone kTable(4, {rvec({0, 1, 0, 1}), rvec({0, 0, 1, 1}), rvec({1, -1, -1, -1}), rvec({0, 0, 0, -1})});

}  // namespace

TEST_CASE("certificate for the sigma ray is 3x1 + 2x2 + 2x3 - x4") {
    Certificate c = extremal_certificate(kTable, {2});
    REQUIRE(c.status == Certificate::Status::FOUND);
    CHECK(c.functional == std::vector<long>{3, 2, 2, -1});
    CHECK(c.height == 3);
    CHECK(c.values == rvec({1, 1, 0, 1}));
    CHECK(certificate_sound(kTable, {2}, c.functional));
    CHECK_FALSE(certificate_sound(kTable, {2}, {1, 0, 0, 0}));
}

TEST_CASE("no lower-height functional supports the sigma ray") {
    // exhaustive independent scan of heights 0..2
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                for (long d = -2; d <= 2; ++d) CHECK_FALSE(certificate_sound(kTable, {2}, {a, b, c, d}));
}

TEST_CASE("parallel and serial certificate searches agree on random cones") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> e(-2, 2);
    for (int t = 0; t < 60; ++t) {
        std::vector<RatVec> gens;
        for (int g = 0; g < 4; ++g) {
            RatVec v;
            do {
                v = rvec({e(rng), e(rng), e(rng)});
            } while (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); }));
            gens.push_back(v);
        }
        Cone cone(3, gens);
        std::vector<size_t> face{static_cast<size_t>(t % 4)};
        Certificate p = extremal_certificate(cone, face, 3), s = extremal_certificate_serial(cone, face, 3);
        CHECK(p.status == s.status);
        CHECK(p.functional == s.functional);
        CHECK(p.height == s.height);
        if (p.status == Certificate::Status::FOUND) CHECK(certificate_sound(cone, face, p.functional));
        if (s.witness) {
            // the witness is a relation with nonnegative weights off the face
            RatVec sum(3, Rat(0));
            for (size_t g = 0; g < gens.size(); ++g) {
                if (g != face[0]) CHECK((*s.witness)[g] >= Rat(0));
                for (size_t i = 0; i < 3; ++i) sum[i] += (*s.witness)[g] * gens[g][i];
            }
            for (const auto& x : sum) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("a ray inside the cone interior has an obstruction witness") {
    Cone cone(2, {rvec({1, 0}), rvec({0, 1}), rvec({1, 1})});
    Certificate c = extremal_certificate(cone, {2}, 4);
    CHECK(c.status == Certificate::Status::INCONCLUSIVE);
    REQUIRE(c.witness.has_value());
}

TEST_CASE("restriction kernel and its orthogonal curves") {
    Quadric q;
    // restriction to the diagonal P^1: both rulings restrict to the same class
    auto diag = tower::diagonal_restriction(q.q);
    (void)diag;
    auto line = Space::formal_base("L", {"h"}, ParamPoly(1));
    PullbackMap r = tower::map_from_columns(q.q, line, {tower::gen(line, "h"), tower::gen(line, "h")});
    std::vector<CurveClass> basis{realize(LineInProjFiber{q.q, "h1"}), realize(LineInProjFiber{q.q, "h2"})};
    KernelReport k = restriction_kernel(r, basis, Rat(3));
    REQUIRE(k.kernel.size() == 1);
    CHECK(k.kernel[0] == rvec({1, -1}));
    REQUIRE(k.perp.size() == 1);
    CHECK(k.perp[0] == rvec({1, 1}));
}

TEST_CASE("pushforward coefficients solve the transposed table") {
    PolyMatrix t(2, 2);
    t(0, 0) = ParamPoly(1);
    t(0, 1) = ParamPoly(1);
    t(0, 1) = ParamPoly::parse("n");
    t(1, 1) = ParamPoly(1);
    PolyVec y = solve_pushforward(vec({2, 3}), t);
    // y0 * row0 + y1 * row1 = observed
    CHECK(y[0] == ParamPoly(2));
    CHECK(y[1] == ParamPoly::parse("3-2n"));
    // the solution 1/n is not polynomial in n
    PolyMatrix r(1, 1);
    r(0, 0) = ParamPoly::parse("n");
    CHECK_THROWS(solve_pushforward(vec({1}), r));
    PolyMatrix singular(2, 2);
    singular(0, 0) = ParamPoly(1);
    singular(0, 1) = ParamPoly(1);
    CHECK_THROWS_AS(solve_pushforward(vec({1, 1}), singular), ContractError);
}

TEST_CASE("negativity verdicts over n >= 3") {
    CHECK(negative_for_all_n(ParamPoly::parse("4-2n")) == Verdict::NEGATIVE);
    CHECK(negative_for_all_n(ParamPoly(-1)) == Verdict::NEGATIVE);
    CHECK(negative_for_all_n(ParamPoly::parse("n-5")) == Verdict::NOT_NEGATIVE);
    CHECK(negative_for_all_n(ParamPoly(0)) == Verdict::NOT_NEGATIVE);
    CHECK(negative_for_all_n(ParamPoly::parse("n^2-10n")) == Verdict::NOT_NEGATIVE);
}

TEST_CASE("curve realizations check their inputs") {
    Quadric q;
    CHECK_THROWS_AS(realize(LineInProjFiber{q.q, "nope"}), ContractError);
    CHECK_THROWS_AS(CurveClass(q.q, vec({1})), DimensionMismatch);
    CurveClass l1 = realize(LineInProjFiber{q.q, "h1"});
    CHECK(intersect(l1, tower::gen(q.q, "h1")) == ParamPoly(1));
    CHECK(intersect(l1, tower::gen(q.q, "h2")) == ParamPoly(0));
    CHECK_THROWS_AS(intersect(l1, tower::gen(q.a, "h1")), tower::SpaceMismatch);
    CurveClass both = combine({{ParamPoly(1), l1}, {ParamPoly(2), realize(LineInProjFiber{q.q, "h2"})}});
    CHECK(both.vec == vec({1, 2}));
}

TEST_CASE("Mori chain on P1 x P1 over P1") {
    Quadric q;
    CurveClass base = realize(LineInProjFiber{q.a, "h1"});
    CurveClass f2 = realize(LineInProjFiber{q.q, "h2"});
    CurveClass f1 = realize(LineInProjFiber{q.q, "h1"});
    auto proj_b = tower::tower_pullback(q.b, q.q);
    ChainSpec good{q.a, {base}, {{q.q, {f2, f1}, {"Q -> A", tower::tower_pullback(q.a, q.q), {}, ""}, {"Q -> B", proj_b, {}, ""}}}};
    ChainResult r = mori_propagate(good);
    REQUIRE(r.cone.size() == 2);
    CHECK(r.steps.size() == 2);
    for (const auto& s : r.steps)
        for (const auto& c : s.conditions) CHECK(c.holds);

    // c'' must not contract the curve contracted by c'
    ChainSpec bad = good;
    bad.steps[0].c_double_prime.pullback = tower::tower_pullback(q.a, q.q);
    try {
        mori_propagate(bad);
        FAIL("expected a hypothesis failure");
    } catch (const ChainHypothesisError& e) {
        CHECK(e.step() == 1);
    }

    // curves that do not form a basis
    ChainSpec dependent = good;
    dependent.steps[0].curves = {f2, f2};
    CHECK_THROWS_AS(mori_propagate(dependent), ChainHypothesisError);
}

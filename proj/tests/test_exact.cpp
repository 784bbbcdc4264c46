#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "towerlab/exact/linalg.hpp"
#include "towerlab/exact/prime_field.hpp"

using namespace towerlab;

TEST_CASE("rationals stay reduced and print as p or p/q") {
    CHECK(Rat(6, 4).str() == "3/2");
    CHECK(Rat(-4, 2).str() == "-2");
    CHECK(Rat(3, -9).str() == "-1/3");
    CHECK(Rat::parse("-7/21") == Rat(-1, 3));
    CHECK(Rat::parse("12") == Rat(12));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse("x"));
    CHECK_THROWS(Rat(1, 2).to_long());
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK(Rat(2, 3).inverse() == Rat(3, 2));
}

TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int i = 0; i < 300; ++i) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rat(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rat(1));
        CHECK(Rat::parse(a.str()) == a);
    }
}

TEST_CASE("polynomials in n parse, print and evaluate") {
    ParamPoly p = ParamPoly::parse("1 - 2n");
    CHECK(p.eval(Rat(3)) == Rat(-5));
    CHECK(ParamPoly::parse(p.str()) == p);
    CHECK(ParamPoly::parse("2n-4") == ParamPoly::n() * ParamPoly(2) - ParamPoly(4));
    CHECK(ParamPoly::parse("n^2+3n").eval(Rat(2)) == Rat(10));
    CHECK(ParamPoly::parse("-1/2").constant() == Rat(-1, 2));
    CHECK(ParamPoly().is_zero());
    CHECK_THROWS_AS(ParamPoly::parse("n^3") * ParamPoly::parse("n^2"), DegreeOverflow);
}

TEST_CASE("interpolation recovers a polynomial from samples") {
    ParamPoly q = ParamPoly::parse("n^2 - 3n + 1/2");
    std::vector<std::pair<Rat, Rat>> pts;
    for (long k = 3; k <= 7; ++k) pts.emplace_back(Rat(k), q.eval(Rat(k)));
    CHECK(interpolate(pts) == q);
    CHECK(poly_identity_check(q, q, 2));
    CHECK_FALSE(poly_identity_check(q, q + ParamPoly(1), 2));
}

TEST_CASE("rank agrees with fraction-free elimination on random integer matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(-3, 3), sz(1, 6);
    for (int t = 0; t < 200; ++t) {
        size_t r = sz(rng), c = sz(rng);
        RatMatrix m(r, c);
        std::vector<std::vector<mpz_class>> z(r, std::vector<mpz_class>(c));
        // low-rank products make the test meaningful
        size_t k = sz(rng) % 3 + 1;
        RatMatrix a(r, k), b(k, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < k; ++j) a(i, j) = Rat(e(rng));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < c; ++j) b(i, j) = Rat(e(rng));
        m = a * b;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) z[i][j] = m(i, j).num();
        CHECK(rank(m) == oracle::bareiss_rank(z));
        // rank-nullity and kernel correctness
        auto ker = kernel_basis(m);
        CHECK(ker.size() + rank(m) == c);
        for (const auto& v : ker)
            for (const auto& x : m * v) CHECK(x.is_zero());
    }
}

TEST_CASE("solve_linear distinguishes unique, inconsistent and underdetermined systems") {
    RatMatrix a{{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
    RatVec x = solve_linear(a, {Rat(3), Rat(4)});
    CHECK(x == RatVec{Rat(1), Rat(1)});
    RatMatrix s{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    CHECK_THROWS_AS(solve_linear(s, {Rat(1), Rat(3)}), NoSolution);
    try {
        solve_linear(s, {Rat(1), Rat(2)});
        FAIL("expected an underdetermined system");
    } catch (const Underdetermined& u) {
        REQUIRE(u.kernel().size() == 1);
        CHECK((s * u.kernel()[0])[0].is_zero());
    }
}

TEST_CASE("inverse and product-identity check") {
    RatMatrix xi{{1, -1, -1, 1}, {0, 2, 2, -3}, {0, 1, 0, -1}, {0, 0, 1, -1}};
    RatMatrix inv = inverse(xi);
    CHECK(matrix_product_is_identity(xi, inv));
    CHECK(matrix_product_is_identity(inv, xi));
    CHECK_FALSE(matrix_product_is_identity(xi, xi));
    CHECK_THROWS(inverse(RatMatrix{{1, 2}, {2, 4}}));
}

TEST_CASE("generic solve interpolates solutions depending on n") {
    // [[1, n], [0, 1]] x = [n^2, n] has x = (0, n)
    PolyMatrix a(2, 2);
    a(0, 0) = ParamPoly(1);
    a(0, 1) = ParamPoly::n();
    a(1, 1) = ParamPoly(1);
    PolyVec b{ParamPoly::parse("n^2"), ParamPoly::n()};
    PolyVec x = solve_generic(a, b);
    CHECK(x[0].is_zero());
    CHECK(x[1] == ParamPoly::n());
    PolyMatrix inv = inverse_generic(a);
    CHECK(inv(0, 1) == -ParamPoly::n());
}

TEST_CASE("prime field helpers") {
    PrimeFieldConfig f(3);
    CHECK(f.inv(2) == 2);
    CHECK(f.reduce(Rat(1, 2)) == std::optional<int64_t>(2));
    CHECK_FALSE(f.reduce(Rat(1, 3)).has_value());
    CHECK(projective_points(3, f).size() == 13);
    CHECK(projective_points(4, f).size() == 40);
    CHECK(rank_mod_p({{1, 2}, {2, 1}}, f) == 1);
    CHECK_THROWS(PrimeFieldConfig(4));
}

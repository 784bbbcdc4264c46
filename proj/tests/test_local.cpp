#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles/oracles.hpp"
#include "towerlab/local/enumerate.hpp"

using namespace towerlab;
using namespace towerlab::local;

namespace {

const oracle::M3 kHyperbolic = {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

std::vector<std::vector<mpz_class>> integral(const RatMatrix& m) {
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            REQUIRE(m(i, j).is_integer());
            out[i][j] = m(i, j).num();
        }
    return out;
}

size_t rank_mod3(const RatMatrix& m) {
    std::vector<std::vector<mpz_class>> z = integral(m);
    // eliminate over F_3 directly
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && z[p][c] % 3 == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(z[p], z[r]);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            mpz_class f = z[i][c] * z[r][c];  // z[r][c]^2 = 1 mod 3
            for (size_t j = 0; j < m.cols(); ++j) z[i][j] = (z[i][j] - f * z[r][j]) % 3;
        }
        ++r;
    }
    return r;
}

// Classification over Q from first principles: rank, and for rank one the
// norm of the normal to the kernel, l G^{-1} l^T with G^{-1} = G here.
StabilizerClass expected_over_q(const RatMatrix& phi) {
    std::vector<std::vector<mpz_class>> z = integral(phi);
    size_t r = oracle::bareiss_rank(z);
    if (r == 0) return StabilizerClass::FULL_SO_W;
    if (r >= 2) return StabilizerClass::TRIVIAL;
    RatVec l;
    for (size_t i = 0; i < phi.rows() && l.empty(); ++i)
        for (size_t j = 0; j < 3; ++j)
            if (!phi(i, j).is_zero()) {
                l = phi.row(i);
                break;
            }
    Rat norm = Rat(2) * l[0] * l[2] + l[1] * l[1];
    return norm.is_zero() ? StabilizerClass::ADDITIVE : StabilizerClass::MULTIPLICATIVE;
}

StabilizerClass class_from_order(long order) {
    switch (order) {
        case 24: return StabilizerClass::FULL_SO_W;
        case 3: return StabilizerClass::ADDITIVE;
        case 2:
        case 4: return StabilizerClass::MULTIPLICATIVE;
        default: return StabilizerClass::TRIVIAL;
    }
}

}  // namespace

TEST_CASE("SO(W) over F3 has the order of PGL(2, F3)") {
    CHECK(oracle::special_orthogonal(kHyperbolic, 3).size() == 24);
}

TEST_CASE("stabilizer classes agree with first principles and with brute force over F3") {
    auto group = oracle::special_orthogonal(kHyperbolic, 3);
    SymplecticSpace e = SymplecticSpace::standard(3);
    QuadSpaceW w = QuadSpaceW::hyperbolic();
    auto family = stabilizer_family();
    CHECK(family.size() >= 50);
    int by_rank[4] = {0, 0, 0, 0};
    size_t compared = 0;
    for (const auto& m : family) {
        StabilizerClass q = expected_over_q(m.phi.matrix);
        CHECK(stabilizer_class_omega(m.phi, w, e) == q);
        CHECK(m.expected == q);
        size_t rq = oracle::bareiss_rank(integral(m.phi.matrix));
        ++by_rank[std::min<size_t>(rq, 3)];
        if (rank_mod3(m.phi.matrix) != rq) continue;
        std::vector<std::array<int, 3>> rows;
        for (size_t i = 0; i < 6; ++i) {
            std::array<int, 3> r{};
            for (size_t j = 0; j < 3; ++j) r[j] = oracle::mod(m.phi.matrix(i, j).to_long(), 3);
            rows.push_back(r);
        }
        StabilizerClass f3 = class_from_order(oracle::stabilizer_order(rows, group, 3));
        if (rq == 1) {
            // skip members whose kernel normal changes type modulo 3
            RatVec l;
            for (size_t i = 0; i < 6 && l.empty(); ++i)
                if (!(m.phi.matrix.row(i) == RatVec(3, Rat(0)))) l = m.phi.matrix.row(i);
            long norm3 = oracle::mod((Rat(2) * l[0] * l[2] + l[1] * l[1]).to_long(), 3);
            bool iso3 = norm3 == 0;
            if (iso3 != (q == StabilizerClass::ADDITIVE)) continue;
        }
        CHECK(f3 == q);
        ++compared;
    }
    CHECK(by_rank[0] >= 1);
    CHECK(by_rank[1] >= 20);
    CHECK(by_rank[2] + by_rank[3] >= 5);
    CHECK(compared >= 30);
    SweepReport s = stabilizer_family_sweep();
    CHECK(s.count == static_cast<long>(family.size()));
    CHECK(s.agree == s.count);
}

TEST_CASE("C* stabilizers: a pair is fixed by lambda = 2 exactly when both parts vanish") {
    for (const auto& m : sigma_family()) {
        RatVec a = m.pair.e12, b = m.pair.e21;
        bool fixed = true;
        for (const auto& x : a) fixed = fixed && Rat(2) * x == x;
        for (const auto& x : b) fixed = fixed && x / Rat(2) == x;
        StabilizerClass want = fixed ? StabilizerClass::MULTIPLICATIVE : StabilizerClass::TRIVIAL;
        CHECK(stabilizer_class_sigma(m.pair) == want);
        CHECK(m.expected == want);
    }
    CHECK(sigma_family().size() >= 10);
}

TEST_CASE("Yoneda squares") {
    SymplecticSpace e = SymplecticSpace::standard(3);
    RatMatrix phi(6, 3);
    phi(0, 0) = Rat(1);  // w1 -> x1
    phi(3, 1) = Rat(1);  // w2 -> y1
    CHECK(yoneda_omega(HomWE(phi), e) == rv({1, 0, 0}));
    CHECK_FALSE(is_isotropic({phi.col(0), phi.col(1)}, e));
    ExtPair p(rv({1, 2}), rv({3, 4}));
    SigmaValue s = yoneda_sigma(p);
    CHECK(s.beta == Rat(11));
    CHECK(s.alpha == Rat(-11));
    CHECK_FALSE(s.in_zero_locus);
    CHECK(yoneda_sigma(ExtPair(rv({1, 0}), rv({0, 1}))).in_zero_locus);
    CHECK_THROWS_AS(yoneda_sigma(ExtPair(rv({1, 0}), rv({1, 0}), RatMatrix{{1, 0}, {0, 0}})), DegenerateModel);
}

TEST_CASE("C* scaling preserves Psi and the swap carries the pairing to -P^T") {
    ExtPair p(rv({1, 2}), rv({3, 4}));
    Po2Result s = po2_act(Po2Element::scale(Rat(5)), p);
    CHECK(s.equivariant);
    CHECK(s.pair.e12 == rv({5, 10}));
    CHECK(s.psi_after == s.psi_before);
    Po2Result w = po2_act(Po2Element::swap(), p);
    CHECK(w.pair.e12 == p.e21);
    CHECK(w.pair.e21 == p.e12);
    CHECK(w.psi_after == -w.psi_before);
    CHECK_THROWS(po2_act(Po2Element::scale(Rat(0)), p));
}

TEST_CASE("normal cone quadric has full rank 4n - 4") {
    for (long n = 3; n <= 5; ++n) {
        QuadricReport q = normal_cone_quadric(n);
        CHECK(q.variables == static_cast<size_t>(4 * n - 4));
        CHECK(q.rank == static_cast<size_t>(4 * n - 4));
        CHECK(q.smooth);
        // oracle: twice the Gram matrix is integral
        RatMatrix g2 = q.gram;
        for (size_t i = 0; i < g2.rows(); ++i)
            for (size_t j = 0; j < g2.cols(); ++j) g2(i, j) *= Rat(2);
        CHECK(oracle::bareiss_rank(integral(g2)) == q.rank);
    }
    CHECK_THROWS(normal_cone_quadric(2));
}

TEST_CASE("regular sequences") {
    CHECK(regular_sequence_check(phi_star_omega_family(SymplecticSpace::standard(3)), 8));
    Quadric q = pairing_quadric(3);
    CHECK(regular_sequence_check({q}, 8));
    CHECK_FALSE(regular_sequence_check({q, q}, 8));
}

TEST_CASE("swap on the incidence over F3 fixes exactly the diagonal") {
    for (int m : {2, 4}) {
        FixedLocusReport par = fixed_locus_incidence(m, PrimeFieldConfig(3));
        CHECK(par == fixed_locus_incidence_serial(m, PrimeFieldConfig(3)));
        // independent count: w ranges over the projectivized omega-orthogonal of v
        long pts = (static_cast<long>(std::pow(3, m)) - 1) / 2;
        long perp = (static_cast<long>(std::pow(3, m - 1)) - 1) / 2;
        CHECK(par.points == pts);
        CHECK(par.incidence == pts * perp);
        CHECK(par.fixed == pts);
        CHECK(par.diagonal == pts);
        CHECK(par.fixed_equals_diagonal);
    }
    CHECK(fixed_locus_incidence(2, PrimeFieldConfig(3)).fixed == 4);
    CHECK(fixed_locus_incidence(4, PrimeFieldConfig(3)).fixed == 40);
}

TEST_CASE("Yoneda zero locus equals isotropy over all of Hom(F3^3, F3^4)") {
    SweepReport par = isotropy_enumeration(4, PrimeFieldConfig(3));
    CHECK(par == isotropy_enumeration_serial(4, PrimeFieldConfig(3)));
    CHECK(par.count == 531441);
    CHECK(par.agree == par.count);
    CHECK(par.positives == oracle::isotropic_hom_count_f3_m4());
    CHECK(oracle::isotropic_hom_count_f3_m4() == 26001);
}

TEST_CASE("seeded samples over Q") {
    SweepReport par = isotropy_samples(1000, 20240611);
    CHECK(par == isotropy_samples_serial(1000, 20240611));
    CHECK(par.agree == 1000);
    // recount isotropic images with the standard form written out by hand
    long iso = 0;
    for (long k = 0; k < 1000; ++k) {
        RatMatrix phi = isotropy_sample(k, 20240611).matrix;
        bool ok = true;
        for (size_t a = 0; a < 3; ++a)
            for (size_t b = a + 1; b < 3; ++b) {
                Rat s(0);
                for (size_t i = 0; i < 3; ++i) s += phi(i, a) * phi(i + 3, b) - phi(i + 3, a) * phi(i, b);
                ok = ok && s.is_zero();
            }
        iso += ok;
    }
    CHECK(par.positives == iso);
}

#include "towerlab/local/enumerate.hpp"

#include <omp.h>

#include <random>

namespace towerlab::local {

namespace {

// omega_L(v, w) = sum v_i w_{h+i} - v_{h+i} w_i on F_p^{2h}.
int64_t omega_mod(const std::vector<int64_t>& v, const std::vector<int64_t>& w, const PrimeFieldConfig& f) {
    size_t h = v.size() / 2;
    int64_t s = 0;
    for (size_t i = 0; i < h; ++i) s += v[i] * w[h + i] - v[h + i] * w[i];
    return f.norm(s);
}

void check_even(int m) {
    if (m < 2 || m % 2 != 0) throw ContractError("m must be even and at least 2");
}

struct PairCounts {
    long incidence = 0, fixed = 0, diagonal = 0;
};

PairCounts count_row(const std::vector<std::vector<int64_t>>& pts, size_t i, const PrimeFieldConfig& f) {
    PairCounts c;
    for (size_t j = 0; j < pts.size(); ++j) {
        if (omega_mod(pts[i], pts[j], f) != 0) continue;
        ++c.incidence;
        // Normalized representatives: the swap fixes ([v],[w]) iff v == w.
        if (pts[i] == pts[j]) ++c.fixed;
    }
    if (omega_mod(pts[i], pts[i], f) == 0) ++c.diagonal;
    return c;
}

FixedLocusReport finish(long points, const PairCounts& c) {
    FixedLocusReport r;
    r.points = points;
    r.incidence = c.incidence;
    r.fixed = c.fixed;
    r.diagonal = c.diagonal;
    r.fixed_equals_diagonal = c.fixed == c.diagonal && c.diagonal == points;
    return r;
}

// Columns of phi for a code in [0, p^{3m}); column c holds digits [c*m, (c+1)*m).
std::vector<std::vector<int64_t>> decode_hom(int64_t code, int m, const PrimeFieldConfig& f) {
    std::vector<std::vector<int64_t>> cols(3, std::vector<int64_t>(m));
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < m; ++i) {
            cols[c][i] = code % f.p;
            code /= f.p;
        }
    return cols;
}

// Row-reduced basis of the span, mod p.
std::vector<std::vector<int64_t>> span_mod_p(std::vector<std::vector<int64_t>> rows, const PrimeFieldConfig& f) {
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        int64_t inv = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            int64_t k = rows[i][c];
            for (size_t j = 0; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(k, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

void classify_hom(int64_t code, int m, const PrimeFieldConfig& f, long& agree, long& positives) {
    auto cols = decode_hom(code, m, f);
    bool upsilon_zero = omega_mod(cols[0], cols[1], f) == 0 && omega_mod(cols[0], cols[2], f) == 0 &&
                        omega_mod(cols[1], cols[2], f) == 0;
    auto basis = span_mod_p(cols, f);
    bool isotropic = true;
    for (size_t i = 0; i < basis.size() && isotropic; ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (omega_mod(basis[i], basis[j], f) != 0) {
                isotropic = false;
                break;
            }
    if (upsilon_zero == isotropic) ++agree;
    if (isotropic) ++positives;
}

int64_t hom_count(int m, const PrimeFieldConfig& f) {
    int64_t total = 1;
    for (int i = 0; i < 3 * m; ++i) total *= f.p;
    return total;
}

bool sample_agrees(const HomWE& phi, const SymplecticSpace& e, bool& isotropic) {
    RatVec y = yoneda_omega(phi, e);
    bool zero = y[0].is_zero() && y[1].is_zero() && y[2].is_zero();
    std::vector<RatVec> cols = {phi.image(0), phi.image(1), phi.image(2)};
    isotropic = is_isotropic(span_basis(cols, e.dim()), e);
    return zero == isotropic;
}

}  // namespace

FixedLocusReport fixed_locus_incidence_serial(int m, const PrimeFieldConfig& cfg) {
    check_even(m);
    auto pts = projective_points(m, cfg);
    PairCounts total;
    for (size_t i = 0; i < pts.size(); ++i) {
        PairCounts c = count_row(pts, i, cfg);
        total.incidence += c.incidence;
        total.fixed += c.fixed;
        total.diagonal += c.diagonal;
    }
    return finish(static_cast<long>(pts.size()), total);
}

FixedLocusReport fixed_locus_incidence(int m, const PrimeFieldConfig& cfg) {
    check_even(m);
    auto pts = projective_points(m, cfg);
    long inc = 0, fix = 0, diag = 0;
    long npts = static_cast<long>(pts.size());
#pragma omp parallel for reduction(+ : inc, fix, diag) schedule(static)
    for (long i = 0; i < npts; ++i) {
        PairCounts c = count_row(pts, static_cast<size_t>(i), cfg);
        inc += c.incidence;
        fix += c.fixed;
        diag += c.diagonal;
    }
    return finish(npts, PairCounts{inc, fix, diag});
}

SweepReport isotropy_enumeration_serial(int m, const PrimeFieldConfig& cfg) {
    check_even(m);
    int64_t total = hom_count(m, cfg);
    SweepReport r;
    r.count = total;
    for (int64_t code = 0; code < total; ++code) classify_hom(code, m, cfg, r.agree, r.positives);
    return r;
}

SweepReport isotropy_enumeration(int m, const PrimeFieldConfig& cfg) {
    check_even(m);
    int64_t total = hom_count(m, cfg);
    long agree = 0, positives = 0;
#pragma omp parallel for reduction(+ : agree, positives) schedule(static)
    for (int64_t code = 0; code < total; ++code) {
        long a = 0, p = 0;
        classify_hom(code, m, cfg, a, p);
        agree += a;
        positives += p;
    }
    return SweepReport{total, agree, positives};
}

HomWE isotropy_sample(long index, uint64_t seed) {
    std::mt19937_64 rng(seed + static_cast<uint64_t>(index));
    auto small = [&]() { return Rat(static_cast<long>(rng() % 7) - 3); };
    RatMatrix phi(6, 3);
    switch (index % 4) {
        case 0:  // generic
            for (size_t i = 0; i < 6; ++i)
                for (size_t j = 0; j < 3; ++j) phi(i, j) = small();
            break;
        case 1:  // columns in span{x1, x2, x3}
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = 0; j < 3; ++j) phi(i, j) = small();
            break;
        case 2: {  // rank at most one
            RatVec v(6), l(3);
            for (auto& x : v) x = small();
            for (auto& x : l) x = small();
            for (size_t i = 0; i < 6; ++i)
                for (size_t j = 0; j < 3; ++j) phi(i, j) = v[i] * l[j];
            break;
        }
        default: {  // columns in span{x1 + y2, x2 + y1, x3}
            for (size_t j = 0; j < 3; ++j) {
                Rat a = small(), b = small(), c = small();
                phi(0, j) = a;
                phi(4, j) = a;
                phi(1, j) = b;
                phi(3, j) = b;
                phi(2, j) = c;
            }
            break;
        }
    }
    return HomWE(phi);
}

SweepReport isotropy_samples_serial(long count, uint64_t seed) {
    SymplecticSpace e = SymplecticSpace::standard(3);
    SweepReport r;
    r.count = count;
    for (long k = 0; k < count; ++k) {
        bool iso = false;
        if (sample_agrees(isotropy_sample(k, seed), e, iso)) ++r.agree;
        if (iso) ++r.positives;
    }
    return r;
}

SweepReport isotropy_samples(long count, uint64_t seed) {
    SymplecticSpace e = SymplecticSpace::standard(3);
    long agree = 0, positives = 0;
#pragma omp parallel for reduction(+ : agree, positives) schedule(dynamic, 16)
    for (long k = 0; k < count; ++k) {
        bool iso = false;
        if (sample_agrees(isotropy_sample(k, seed), e, iso)) ++agree;
        if (iso) ++positives;
    }
    return SweepReport{count, agree, positives};
}

std::vector<FamilyMember> stabilizer_family() {
    // Images inside the Lagrangian span{x1, x2, x3} of the standard Q^6.
    const std::vector<RatVec> lag = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {1, 2, 0, 0, 0, 0}};
    QuadSpaceW w = QuadSpaceW::hyperbolic();
    RatMatrix ginv = inverse(w.gram);
    auto outer = [](const RatVec& v, const RatVec& l) {
        RatMatrix m(6, 3);
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 3; ++j) m(i, j) = v[i] * l[j];
        return m;
    };
    auto add = [](RatMatrix a, const RatMatrix& b) {
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
        return a;
    };
    std::vector<RatVec> functionals;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                if (a || b || c) functionals.push_back({a, b, c});

    std::vector<FamilyMember> fam;
    fam.push_back({HomWE(RatMatrix(6, 3)), StabilizerClass::FULL_SO_W, "rank0"});
    // Rank one: phi = v (x) l, ker(phi) = ker(l), ker^perp spanned by G^{-1} l.
    for (size_t vi = 0; vi < 2; ++vi)
        for (const auto& l : functionals) {
            RatVec dir = ginv * l;
            bool iso = w.kappa(dir, dir).is_zero();
            fam.push_back({HomWE(outer(lag[vi == 0 ? 0 : 3], l)),
                           iso ? StabilizerClass::ADDITIVE : StabilizerClass::MULTIPLICATIVE, "rank1"});
        }
    // Rank two and three: independent images against independent functionals.
    for (size_t k = 0; k + 1 < functionals.size(); k += 3) {
        const RatVec& l1 = functionals[k];
        const RatVec& l2 = functionals[k + 1];
        RatMatrix fl = RatMatrix::from_rows({l1, l2}, 3);
        if (rank(fl) < 2) continue;
        fam.push_back({HomWE(add(outer(lag[0], l1), outer(lag[1], l2))), StabilizerClass::TRIVIAL, "rank2"});
    }
    fam.push_back({HomWE(add(add(outer(lag[0], {1, 0, 0}), outer(lag[1], {0, 1, 0})), outer(lag[2], {0, 0, 1}))),
                   StabilizerClass::TRIVIAL, "rank3"});
    fam.push_back({HomWE(add(add(outer(lag[3], {1, 1, 0}), outer(lag[1], {0, 1, 1})), outer(lag[2], {1, 0, 1}))),
                   StabilizerClass::TRIVIAL, "rank3"});
    return fam;
}

std::vector<PairMember> sigma_family() {
    std::vector<PairMember> fam;
    const std::vector<RatVec> vecs = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, -1, 0}, {2, 0, 0, 1}, {0, 0, 0, -3}};
    for (const auto& a : vecs)
        for (const auto& b : vecs) {
            bool zero = a == vecs[0] && b == vecs[0];
            fam.push_back({ExtPair(a, b), zero ? StabilizerClass::MULTIPLICATIVE : StabilizerClass::TRIVIAL});
        }
    return fam;
}

SweepReport stabilizer_family_sweep() {
    SymplecticSpace e = SymplecticSpace::standard(3);
    QuadSpaceW w = QuadSpaceW::hyperbolic();
    SweepReport r;
    for (const auto& m : stabilizer_family()) {
        ++r.count;
        if (stabilizer_class_omega(m.phi, w, e) == m.expected) ++r.agree;
        if (m.expected == StabilizerClass::ADDITIVE) ++r.positives;
    }
    return r;
}

SweepReport sigma_family_sweep() {
    SweepReport r;
    for (const auto& m : sigma_family()) {
        ++r.count;
        StabilizerClass got = stabilizer_class_sigma(m.pair);
        // Classification must also be invariant under the scaling action.
        StabilizerClass scaled = stabilizer_class_sigma(po2_act(Po2Element::scale(Rat(-2)), m.pair).pair);
        if (got == m.expected && scaled == m.expected) ++r.agree;
        if (m.expected == StabilizerClass::MULTIPLICATIVE) ++r.positives;
    }
    return r;
}

}  // namespace towerlab::local

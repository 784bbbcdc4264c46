#include "towerlab/local/symplectic.hpp"

#include <random>

namespace towerlab::local {

namespace {

bool antisymmetric(const RatMatrix& g) {
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.cols(); ++j)
            if (g(i, j) != -g(j, i)) return false;
    return true;
}

bool symmetric(const RatMatrix& g) { return g == g.transpose(); }

Rat bilinear(const RatMatrix& g, const RatVec& u, const RatVec& v) {
    if (u.size() != g.rows() || v.size() != g.rows())
        throw DimensionMismatch("vector length " + std::to_string(u.size()) + "/" +
                                std::to_string(v.size()) + " against form of size " +
                                std::to_string(g.rows()));
    return dot(u, g * v);
}

}  // namespace

SymplecticSpace::SymplecticSpace(RatMatrix g) : gram(std::move(g)) {
    if (!gram.square() || gram.rows() % 2 != 0) throw ContractError("symplectic Gram must be square of even size");
    if (!antisymmetric(gram)) throw ContractError("symplectic Gram is not antisymmetric");
    if (rank(gram) != gram.rows()) throw ContractError("symplectic Gram is singular");
}

SymplecticSpace SymplecticSpace::standard(size_t m) {
    RatMatrix g(2 * m, 2 * m);
    for (size_t i = 0; i < m; ++i) {
        g(i, m + i) = Rat(1);
        g(m + i, i) = Rat(-1);
    }
    return SymplecticSpace(std::move(g));
}

Rat SymplecticSpace::omega(const RatVec& u, const RatVec& v) const { return bilinear(gram, u, v); }

QuadSpaceW::QuadSpaceW(RatMatrix g) : gram(std::move(g)) {
    if (gram.rows() != 3 || gram.cols() != 3) throw ContractError("W has dimension 3");
    if (!symmetric(gram)) throw ContractError("Killing Gram is not symmetric");
    if (rank(gram) != 3) throw ContractError("Killing Gram is singular");
}

QuadSpaceW QuadSpaceW::hyperbolic() { return QuadSpaceW(RatMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}); }

Rat QuadSpaceW::kappa(const RatVec& u, const RatVec& v) const { return bilinear(gram, u, v); }

HomWE::HomWE(RatMatrix m) : matrix(std::move(m)) {
    if (matrix.cols() != 3) throw DimensionMismatch("Hom(W, E) needs 3 columns");
}

ExtPair::ExtPair(RatVec a, RatVec b) : ExtPair(a, b, RatMatrix::identity(a.size())) {}

ExtPair::ExtPair(RatVec a, RatVec b, RatMatrix p) : e12(std::move(a)), e21(std::move(b)), pairing(std::move(p)) {
    if (e12.size() != e21.size()) throw DimensionMismatch("e12 and e21 lengths differ");
    if (pairing.rows() != e12.size() || pairing.cols() != e21.size())
        throw DimensionMismatch("pairing shape does not match the Ext spaces");
}

std::string to_string(StabilizerClass c) {
    switch (c) {
        case StabilizerClass::FULL_SO_W: return "FULL_SO_W";
        case StabilizerClass::ADDITIVE: return "ADDITIVE";
        case StabilizerClass::MULTIPLICATIVE: return "MULTIPLICATIVE";
        case StabilizerClass::TRIVIAL: return "TRIVIAL";
    }
    return "?";
}

StabilizerClass stabilizer_from_string(const std::string& s) {
    for (auto c : {StabilizerClass::FULL_SO_W, StabilizerClass::ADDITIVE, StabilizerClass::MULTIPLICATIVE,
                   StabilizerClass::TRIVIAL})
        if (to_string(c) == s) return c;
    throw ContractError("unknown stabilizer class '" + s + "'");
}

bool is_isotropic(const std::vector<RatVec>& generators, const SymplecticSpace& e) {
    for (const auto& g : generators)
        if (g.size() != e.dim()) throw DimensionMismatch("generator has wrong dimension");
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = i + 1; j < generators.size(); ++j)
            if (!e.omega(generators[i], generators[j]).is_zero()) return false;
    return true;
}

RatVec yoneda_omega(const HomWE& phi, const SymplecticSpace& e) {
    if (phi.matrix.rows() != e.dim()) throw DimensionMismatch("Hom(W, E) rows must equal dim E");
    RatVec out;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) out.push_back(e.omega(phi.image(i), phi.image(j)));
    return out;
}

StabilizerClass stabilizer_class_omega(const HomWE& phi, const QuadSpaceW& w, const SymplecticSpace& e) {
    if (phi.matrix.rows() != e.dim()) throw DimensionMismatch("Hom(W, E) rows must equal dim E");
    if (!is_isotropic({phi.image(0), phi.image(1), phi.image(2)}, e)) throw NotInHomOmega();
    size_t r = rank(phi.matrix);
    if (r == 0) return StabilizerClass::FULL_SO_W;
    if (r >= 2) return StabilizerClass::TRIVIAL;
    // ker(phi) is a plane; its kappa-orthogonal is the line solving kappa(w, k) = 0.
    std::vector<RatVec> ker = kernel_basis(phi.matrix);
    RatMatrix constraints(ker.size(), 3);
    for (size_t i = 0; i < ker.size(); ++i) {
        RatVec gk = w.gram * ker[i];
        for (size_t j = 0; j < 3; ++j) constraints(i, j) = gk[j];
    }
    std::vector<RatVec> perp = kernel_basis(constraints);
    if (perp.size() != 1) throw std::logic_error("kernel orthogonal of a plane must be a line");
    return w.kappa(perp[0], perp[0]).is_zero() ? StabilizerClass::ADDITIVE : StabilizerClass::MULTIPLICATIVE;
}

StabilizerClass stabilizer_class_sigma(const ExtPair& pair) {
    auto zero = [](const RatVec& v) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    };
    return zero(pair.e12) && zero(pair.e21) ? StabilizerClass::MULTIPLICATIVE : StabilizerClass::TRIVIAL;
}

Rat psi(const ExtPair& pair) { return dot(pair.e12, pair.pairing * pair.e21); }

SigmaValue yoneda_sigma(const ExtPair& pair) {
    if (rank(pair.pairing) != pair.pairing.rows()) throw DegenerateModel("singular Ext pairing");
    Rat beta = psi(pair);
    return {-beta, beta, beta.is_zero()};
}

Po2Result po2_act(const Po2Element& g, const ExtPair& pair) {
    Rat before = psi(pair);
    if (g.kind == Po2Element::Kind::Scale) {
        if (g.lambda.is_zero()) throw ContractError("scaling by zero is not in C*");
        RatVec a = pair.e12, b = pair.e21;
        for (auto& x : a) x *= g.lambda;
        Rat inv = g.lambda.inverse();
        for (auto& x : b) x *= inv;
        ExtPair out(a, b, pair.pairing);
        Rat after = psi(out);
        return {out, before, after, after == before};
    }
    RatMatrix swapped = pair.pairing.transpose();
    for (size_t i = 0; i < swapped.rows(); ++i)
        for (size_t j = 0; j < swapped.cols(); ++j) swapped(i, j) = -swapped(i, j);
    ExtPair out(pair.e21, pair.e12, swapped);
    Rat after = psi(out);
    return {out, before, after, after == -before};
}

size_t symmetric_rank(RatMatrix s) {
    if (!s.square() || !symmetric(s)) throw ContractError("symmetric_rank needs a symmetric matrix");
    size_t n = s.rows();
    auto swap_index = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < n; ++j) std::swap(s(a, j), s(b, j));
        for (size_t i = 0; i < n; ++i) std::swap(s(i, a), s(i, b));
    };
    size_t r = 0;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i)
            if (!s(i, i).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) {
            // Zero diagonal: row/column operation i += j creates 2 s(i,j) on the diagonal.
            size_t pi = n, pj = n;
            for (size_t i = k; i < n && pi == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (!s(i, j).is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (size_t c = 0; c < n; ++c) s(pi, c) += s(pj, c);
            for (size_t c = 0; c < n; ++c) s(c, pi) += s(c, pj);
            piv = pi;
        }
        swap_index(k, piv);
        Rat d = s(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (s(i, k).is_zero()) continue;
            Rat f = s(i, k) / d;
            for (size_t j = k; j < n; ++j) s(i, j) -= f * s(k, j);
            for (size_t j = k; j < n; ++j) s(j, i) = s(i, j);
        }
        ++r;
    }
    return r;
}

QuadricReport normal_cone_quadric(long n) { return normal_cone_quadric(n, RatMatrix::identity(2 * n - 2)); }

QuadricReport normal_cone_quadric(long n, const RatMatrix& pairing) {
    if (n < 3) throw ContractError("n must be at least 3");
    size_t m = static_cast<size_t>(2 * n - 2);
    if (pairing.rows() != m || pairing.cols() != m) throw DimensionMismatch("pairing must be (2n-2)x(2n-2)");
    if (rank(pairing) != m) throw DegenerateModel("pairing is degenerate");
    RatMatrix g(2 * m, 2 * m);
    Rat half(1, 2);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            g(i, m + j) = half * pairing(i, j);
            g(m + j, i) = half * pairing(i, j);
        }
    size_t r = symmetric_rank(g);
    return {g, 2 * m, r, r == 2 * m};
}

Quadric::Quadric(RatMatrix q) : Quadric(q, RatVec(q.rows(), Rat(0)), Rat(0)) {}

Quadric::Quadric(RatMatrix q, RatVec l, Rat c) : quad(std::move(q)), linear(std::move(l)), constant(std::move(c)) {
    if (!quad.square() || linear.size() != quad.rows()) throw DimensionMismatch("quadric shape mismatch");
}

bool regular_sequence_check(const std::vector<Quadric>& quadrics, int samples, uint64_t seed) {
    if (quadrics.empty()) return true;
    size_t dim = quadrics[0].quad.rows();
    for (const auto& q : quadrics) {
        if (q.quad.rows() != dim) throw DimensionMismatch("quadrics live on different spaces");
        if (!q.constant.is_zero()) throw ContractError("non-homogeneous quadric: constant term");
        for (const auto& l : q.linear)
            if (!l.is_zero()) throw ContractError("non-homogeneous quadric: linear term");
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        RatVec x(dim);
        for (auto& v : x) v = Rat(static_cast<long>(rng() % 11) - 5);
        RatMatrix jac(quadrics.size(), dim);
        for (size_t k = 0; k < quadrics.size(); ++k) {
            // gradient of x^T S x is (S + S^T) x
            RatVec g1 = quadrics[k].quad * x;
            RatVec g2 = quadrics[k].quad.transpose() * x;
            for (size_t j = 0; j < dim; ++j) jac(k, j) = g1[j] + g2[j];
        }
        if (rank(jac) == quadrics.size()) return true;
    }
    return false;
}

std::vector<Quadric> phi_star_omega_family(const SymplecticSpace& e) {
    size_t d = e.dim();
    std::vector<Quadric> out;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            // variables ordered column by column: phi(w_c) occupies [c*d, (c+1)*d)
            RatMatrix s(3 * d, 3 * d);
            for (size_t a = 0; a < d; ++a)
                for (size_t b = 0; b < d; ++b) {
                    Rat half = e.gram(a, b) * Rat(1, 2);
                    s(i * d + a, j * d + b) += half;
                    s(j * d + b, i * d + a) += half;
                }
            out.emplace_back(std::move(s));
        }
    return out;
}

Quadric pairing_quadric(long n) { return Quadric(normal_cone_quadric(n).gram); }

}  // namespace towerlab::local

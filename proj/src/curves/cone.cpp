#include "towerlab/curves/cone.hpp"

#include <omp.h>

#include <algorithm>
#include <climits>
#include <numeric>

#include "towerlab/exact/linalg.hpp"

namespace towerlab::curves {

namespace {

// Generators rescaled by positive integers; signs of pairings are unchanged.
std::vector<std::vector<long>> integral_generators(const Cone& cone) {
    std::vector<std::vector<long>> out;
    for (const auto& g : cone.generators) {
        mpz_class l = 1;
        for (const auto& x : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
        std::vector<long> v;
        for (const auto& x : g) v.push_back((x * Rat(l, mpz_class(1))).to_long());
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<bool> face_mask(const Cone& cone, const std::vector<size_t>& face) {
    std::vector<bool> mask(cone.generators.size(), false);
    for (size_t f : face) {
        if (f >= cone.generators.size()) throw ContractError("face index out of range");
        mask[f] = true;
    }
    return mask;
}

long power(long base, size_t e) {
    long r = 1;
    for (size_t i = 0; i < e; ++i) r *= base;
    return r;
}

// Digits of idx in base 2h+1, shifted to [-h, h]; increasing idx is lexicographic order.
void decode(long idx, long h, std::vector<long>& out) {
    long b = 2 * h + 1;
    for (size_t i = out.size(); i-- > 0;) {
        out[i] = idx % b - h;
        idx /= b;
    }
}

bool supports(const std::vector<long>& d, const std::vector<std::vector<long>>& gens, const std::vector<bool>& face,
              long h) {
    long top = 0;
    for (long x : d) top = std::max(top, std::labs(x));
    if (top != h) return false;
    for (size_t g = 0; g < gens.size(); ++g) {
        long s = 0;
        for (size_t i = 0; i < d.size(); ++i) s += d[i] * gens[g][i];
        if (face[g] ? s != 0 : s <= 0) return false;
    }
    return true;
}

Certificate found(const Cone& cone, std::vector<long> d, long h) {
    Certificate c;
    c.status = Certificate::Status::FOUND;
    c.height = h;
    for (const auto& g : cone.generators) {
        Rat s(0);
        for (size_t i = 0; i < d.size(); ++i) s += Rat(d[i]) * g[i];
        c.values.push_back(s);
    }
    c.functional = std::move(d);
    return c;
}

// Nonnegative integral combination of non-face generators lying in the span
// of the face: it obstructs every supporting functional.
std::optional<RatVec> dependency_witness(const Cone& cone, const std::vector<bool>& face) {
    std::vector<size_t> others, inside;
    for (size_t i = 0; i < face.size(); ++i) (face[i] ? inside : others).push_back(i);
    if (others.empty()) return std::nullopt;
    const long cmax = 3;
    long total = power(cmax + 1, others.size());
    for (long code = 1; code < total; ++code) {
        RatVec combo(cone.dim, Rat(0));
        RatVec w(cone.generators.size(), Rat(0));
        long c = code;
        for (size_t k = 0; k < others.size(); ++k) {
            long coef = c % (cmax + 1);
            c /= cmax + 1;
            w[others[k]] = Rat(coef);
            for (size_t i = 0; i < cone.dim; ++i) combo[i] += Rat(coef) * cone.generators[others[k]][i];
        }
        if (inside.empty()) {
            if (std::all_of(combo.begin(), combo.end(), [](const Rat& x) { return x.is_zero(); })) return w;
            continue;
        }
        std::vector<RatVec> cols;
        for (size_t f : inside) cols.push_back(cone.generators[f]);
        RatMatrix fm = RatMatrix::from_columns(cols, cone.dim);
        try {
            RatVec a = solve_linear(fm, combo);
            for (size_t k = 0; k < inside.size(); ++k) w[inside[k]] = -a[k];
            return w;
        } catch (const NoSolution&) {
        } catch (const Underdetermined&) {
            // dependent face generators: any particular solution will do
            Rref rr = rref(RatMatrix::from_rows([&] {
                std::vector<RatVec> rows;
                for (size_t i = 0; i < cone.dim; ++i) {
                    RatVec r = fm.row(i);
                    r.push_back(combo[i]);
                    rows.push_back(r);
                }
                return rows;
            }(), inside.size() + 1));
            RatVec a(inside.size(), Rat(0));
            for (size_t i = 0; i < rr.pivots.size(); ++i) a[rr.pivots[i]] = rr.reduced(i, inside.size());
            for (size_t k = 0; k < inside.size(); ++k) w[inside[k]] = -a[k];
            return w;
        }
    }
    return std::nullopt;
}

Certificate inconclusive(const Cone& cone, const std::vector<bool>& face) {
    Certificate c;
    c.witness = dependency_witness(cone, face);
    return c;
}

}  // namespace

Cone::Cone(size_t d, std::vector<RatVec> gens) : dim(d), generators(std::move(gens)) {
    for (const auto& g : generators) {
        if (g.size() != dim) throw DimensionMismatch("cone generator of wrong length");
        if (std::all_of(g.begin(), g.end(), [](const Rat& x) { return x.is_zero(); }))
            throw ContractError("cone generators must be nonzero");
    }
}

Certificate extremal_certificate_serial(const Cone& cone, const std::vector<size_t>& face, long bound) {
    auto gens = integral_generators(cone);
    auto mask = face_mask(cone, face);
    std::vector<long> d(cone.dim);
    for (long h = 0; h <= bound; ++h) {
        long total = power(2 * h + 1, cone.dim);
        for (long idx = 0; idx < total; ++idx) {
            decode(idx, h, d);
            if (supports(d, gens, mask, h)) return found(cone, d, h);
        }
    }
    return inconclusive(cone, mask);
}

Certificate extremal_certificate(const Cone& cone, const std::vector<size_t>& face, long bound) {
    auto gens = integral_generators(cone);
    auto mask = face_mask(cone, face);
    for (long h = 0; h <= bound; ++h) {
        long total = power(2 * h + 1, cone.dim);
        long best = LONG_MAX;
#pragma omp parallel
        {
            std::vector<long> d(cone.dim);
#pragma omp for reduction(min : best) schedule(static)
            for (long idx = 0; idx < total; ++idx) {
                if (idx >= best) continue;
                decode(idx, h, d);
                if (supports(d, gens, mask, h)) best = std::min(best, idx);
            }
        }
        if (best != LONG_MAX) {
            std::vector<long> d(cone.dim);
            decode(best, h, d);
            return found(cone, d, h);
        }
    }
    return inconclusive(cone, mask);
}

bool certificate_sound(const Cone& cone, const std::vector<size_t>& face, const std::vector<long>& functional) {
    if (functional.size() != cone.dim) return false;
    auto mask = face_mask(cone, face);
    for (size_t g = 0; g < cone.generators.size(); ++g) {
        Rat s(0);
        for (size_t i = 0; i < cone.dim; ++i) s += Rat(functional[i]) * cone.generators[g][i];
        if (s.sign() < 0) return false;
        if (mask[g] != s.is_zero()) return false;
    }
    return true;
}

KernelReport restriction_kernel(const PullbackMap& restriction, const std::vector<CurveClass>& curve_basis,
                                const Rat& n) {
    RatMatrix m = evaluate(restriction.matrix, n);
    size_t src = restriction.source->picard_rank();
    KernelReport out;
    auto ker = kernel_basis(m);
    out.kernel = ker.empty() ? ker : span_basis(ker, src);
    RatMatrix constraints(out.kernel.size(), curve_basis.size());
    for (size_t c = 0; c < curve_basis.size(); ++c) {
        if (curve_basis[c].space.get() != restriction.source.get())
            throw tower::SpaceMismatch("curve basis must live on the restriction's source");
        RatVec v = evaluate(curve_basis[c].vec, n);
        for (size_t k = 0; k < out.kernel.size(); ++k) constraints(k, c) = dot(v, out.kernel[k]);
    }
    auto perp = kernel_basis(constraints);
    out.perp = perp.empty() ? perp : span_basis(perp, curve_basis.size());
    return out;
}

}  // namespace towerlab::curves

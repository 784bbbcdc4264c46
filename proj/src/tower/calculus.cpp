#include "towerlab/tower/calculus.hpp"

#include <optional>

#include "towerlab/exact/linalg.hpp"

namespace towerlab::tower {

namespace {

std::optional<PolyMatrix> embedding(const SpacePtr& ancestor, const Space& s) {
    if (&s == ancestor.get()) return PolyMatrix::identity(s.picard_rank());
    for (auto& [parent, emb] : s.parents()) {
        auto inner = embedding(ancestor, *parent);
        if (inner) return emb * *inner;
    }
    return std::nullopt;
}

const ProjBundleKind& as_proj_bundle(const SpacePtr& s) {
    auto* k = std::get_if<ProjBundleKind>(&s->kind());
    if (!k) throw ContractError("'" + s->id() + "' is not a projective bundle");
    return *k;
}

const BlowUpKind& as_blow_up(const SpacePtr& s) {
    auto* k = std::get_if<BlowUpKind>(&s->kind());
    if (!k) throw ContractError("'" + s->id() + "' is not a blow-up");
    return *k;
}

void require_same(const SpacePtr& a, const SpacePtr& b, const std::string& what) {
    if (a.get() != b.get()) throw SpaceMismatch(what + ": '" + a->id() + "' vs '" + b->id() + "'");
}

ParamPoly binomial(const ParamPoly& top, long k) {
    ParamPoly acc(1);
    Rat fact(1);
    for (long i = 0; i < k; ++i) {
        acc *= top - ParamPoly(Rat(i));
        fact *= Rat(i + 1);
    }
    return acc * ParamPoly(fact.inverse());
}

}  // namespace

// ---- pullbacks -------------------------------------------------------------

bool is_ancestor(const SpacePtr& ancestor, const SpacePtr& s) { return embedding(ancestor, *s).has_value(); }

PullbackMap tower_pullback(const SpacePtr& ancestor, const SpacePtr& s) {
    auto m = embedding(ancestor, *s);
    if (!m) throw SpaceMismatch("'" + ancestor->id() + "' is not below '" + s->id() + "' in the construction");
    return PullbackMap(ancestor, s, *m);
}

PullbackMap identity_map(const SpacePtr& s) {
    return PullbackMap(s, s, PolyMatrix::identity(s->picard_rank()), true);
}

PullbackMap map_from_columns(const SpacePtr& source, const SpacePtr& target, const std::vector<DivClass>& columns,
                             bool identification) {
    if (columns.size() != source->picard_rank())
        throw DimensionMismatch("map '" + source->id() + "' -> '" + target->id() + "' needs " +
                                std::to_string(source->picard_rank()) + " columns");
    std::vector<PolyVec> cols;
    for (const auto& c : columns) {
        require_same(c.space, target, "map column lives on the wrong space");
        cols.push_back(c.coords);
    }
    return PullbackMap(source, target, PolyMatrix::from_columns(cols, target->picard_rank()), identification);
}

DivClass pullback(const PullbackMap& f, const DivClass& d) {
    require_same(d.space, f.source, "pullback of a class from the wrong space");
    return DivClass(f.target, f.matrix * d.coords);
}

PullbackMap compose(const PullbackMap& f, const PullbackMap& g) {
    require_same(f.target, g.source, "composing non-composable maps");
    return PullbackMap(f.source, g.target, g.matrix * f.matrix, f.identification && g.identification);
}

PullbackMap inverse(const PullbackMap& f) {
    if (!f.matrix.square())
        throw ContractError("map '" + f.source->id() + "' -> '" + f.target->id() + "' is not invertible (not square)");
    PolyMatrix inv;
    try {
        inv = inverse_generic(f.matrix);
    } catch (const ContractError&) {
        throw ContractError("map '" + f.source->id() + "' -> '" + f.target->id() + "' is not invertible");
    }
    return PullbackMap(f.target, f.source, inv, true);
}

DivClass transport_class(const DivClass& d, const std::vector<TransportStep>& via, const std::set<std::string>& drop,
                         const SpacePtr& onto) {
    DivClass cur = d;
    for (const auto& step : via) cur = pullback(step.inverted ? inverse(step.map) : step.map, cur);
    for (const auto& g : drop)
        if (!cur.space->has_gen(g)) throw ContractError("cannot drop unknown generator '" + g + "'");
    PolyVec kept;
    std::vector<std::string> names;
    for (size_t i = 0; i < cur.coords.size(); ++i) {
        const auto& name = cur.space->basis()[i];
        if (drop.count(name)) continue;
        kept.push_back(cur.coords[i]);
        names.push_back(name);
    }
    if (names != onto->basis()) throw SpaceMismatch("remaining generators do not form the basis of '" + onto->id() + "'");
    return DivClass(onto, kept);
}

// ---- bundles ---------------------------------------------------------------

FormalBundle trivial_bundle(const SpacePtr& s, const ParamPoly& rank) { return FormalBundle(rank, zero_class(s)); }

FormalBundle line_bundle(const DivClass& c1) { return FormalBundle(ParamPoly(1), c1); }

FormalBundle tautological_sub(const SpacePtr& pb) {
    as_proj_bundle(pb);
    return FormalBundle(ParamPoly(1), -gen(pb, pb->basis().back()));
}

FormalBundle dual(const FormalBundle& f) { return FormalBundle(f.rank, -f.c1); }

FormalBundle tensor_line(const FormalBundle& f, const DivClass& line_c1) {
    return FormalBundle(f.rank, f.c1 + f.rank * line_c1);
}

FormalBundle tensor(const FormalBundle& a, const FormalBundle& b) {
    require_same(a.space, b.space, "tensor of bundles on different spaces");
    return FormalBundle(a.rank * b.rank, b.rank * a.c1 + a.rank * b.c1);
}

FormalBundle quotient(const FormalBundle& total, const FormalBundle& sub) {
    require_same(total.space, sub.space, "quotient of bundles on different spaces");
    ParamPoly r = total.rank - sub.rank;
    if (!r.is_zero() && !positive_at_samples(r)) throw ContractError("quotient by a subbundle of larger rank");
    return FormalBundle(r, total.c1 - sub.c1);
}

FormalBundle kernel(const FormalBundle& total, const FormalBundle& quot) { return quotient(total, quot); }

FormalBundle extension(const FormalBundle& sub, const FormalBundle& quot) {
    require_same(sub.space, quot.space, "extension of bundles on different spaces");
    return FormalBundle(sub.rank + quot.rank, sub.c1 + quot.c1);
}

FormalBundle dsum(const FormalBundle& a, const FormalBundle& b) { return extension(a, b); }

FormalBundle sym2(const FormalBundle& f) { return symk(f, 2); }

FormalBundle symk(const FormalBundle& f, long k) {
    if (k < 0) throw ContractError("negative symmetric power");
    if (k == 0) return trivial_bundle(f.space, ParamPoly(1));
    ParamPoly top = f.rank + ParamPoly(Rat(k - 1));
    return FormalBundle(binomial(top, k), binomial(top, k - 1) * f.c1);
}

FormalBundle wedge_top(const FormalBundle& f) { return FormalBundle(ParamPoly(1), f.c1); }

FormalBundle pull_bundle(const FormalBundle& f, const SpacePtr& descendant) {
    return pull_bundle(tower_pullback(f.space, descendant), f);
}

FormalBundle pull_bundle(const PullbackMap& f, const FormalBundle& b) {
    return FormalBundle(b.rank, pullback(f, b.c1));
}

FormalBundle relative_tangent(const SpacePtr& pb) {
    const auto& k = as_proj_bundle(pb);
    const ParamPoly& r = k.bundle.rank;
    DivClass xi = gen(pb, pb->basis().back());
    DivClass c1 = r * xi + pullback(tower_pullback(k.base, pb), k.bundle.c1);
    return FormalBundle(r - ParamPoly(1), c1);
}

DivClass relative_cotangent_class(const SpacePtr& pb) { return -relative_tangent(pb).c1; }

// ---- canonical classes -----------------------------------------------------

DivClass canonical_class(const SpacePtr& s) {
    const auto& kind = s->kind();
    if (auto* k = std::get_if<FormalBaseKind>(&kind)) {
        if (!k->canonical) throw MissingCanonical("formal base '" + s->id() + "' declares no canonical class");
        return DivClass(s, *k->canonical);
    }
    if (auto* k = std::get_if<ProjBundleKind>(&kind)) {
        DivClass base_k = pullback(tower_pullback(k->base, s), canonical_class(k->base));
        return base_k - relative_tangent(s).c1;
    }
    if (auto* k = std::get_if<BlowUpKind>(&kind)) {
        DivClass amb_k = pullback(tower_pullback(k->ambient, s), canonical_class(k->ambient));
        DivClass e = ParamPoly(k->exc_sign) * gen(s, s->basis().back());
        return amb_k + (k->center.codim - ParamPoly(1)) * e;
    }
    if (auto* k = std::get_if<FiberProductKind>(&kind)) {
        auto up = [&](const SpacePtr& f) { return pullback(tower_pullback(f, s), canonical_class(f)); };
        return up(k->left) + up(k->right) - up(k->over);
    }
    const auto& k = std::get<DivisorInKind>(kind);
    DivClass amb_k = canonical_class(k.ambient);
    return DivClass(s, (amb_k + DivClass(k.ambient, k.divisor)).coords);
}

DivClass ambient_canonical(const SpacePtr& s, const FormalBundle& normal) {
    require_same(normal.space, s, "normal bundle must live on the subvariety");
    return canonical_class(s) - normal.c1;
}

DivClass blowup_ambient_canonical(const SpacePtr& blowup, const DivClass& restricted_canonical,
                                  const ParamPoly& ambient_codim) {
    const auto& k = as_blow_up(blowup);
    require_same(restricted_canonical.space, k.ambient, "restricted canonical must live on the blown-up space");
    DivClass e = ParamPoly(k.exc_sign) * gen(blowup, blowup->basis().back());
    return pullback(tower_pullback(k.ambient, blowup), restricted_canonical) + (ambient_codim - ParamPoly(1)) * e;
}

// ---- fiber products and blow-ups --------------------------------------------

PullbackMap diagonal_restriction(const SpacePtr& fp) {
    auto* k = std::get_if<FiberProductKind>(&fp->kind());
    if (!k) throw ContractError("'" + fp->id() + "' is not a fiber product");
    auto* l = std::get_if<ProjBundleKind>(&k->left->kind());
    auto* r = std::get_if<ProjBundleKind>(&k->right->kind());
    if (!l || !r || l->base.get() != k->over.get() || r->base.get() != k->over.get())
        throw ContractError("diagonal needs two projective bundles over the common base");
    if (l->bundle.rank != r->bundle.rank || !(l->bundle.c1 == r->bundle.c1))
        throw ContractError("diagonal needs the same bundle on both factors");
    size_t lr = k->left->picard_rank();
    PolyMatrix m(lr, fp->picard_rank());
    for (size_t i = 0; i < lr; ++i) {
        m(i, k->left_slots[i]) = ParamPoly(1);
        m(i, k->right_slots[i]) = ParamPoly(1);
    }
    return PullbackMap(fp, k->left, m);
}

DivClass diagonal_ideal(const SpacePtr& fp) {
    PullbackMap delta = diagonal_restriction(fp);
    const auto& k = std::get<FiberProductKind>(fp->kind());
    DivClass target = relative_cotangent_class(k.left);
    size_t lr = k.left->picard_rank();
    size_t n = fp->picard_rank();
    PolyMatrix a(lr + 1, n);
    PolyVec b(lr + 1);
    for (size_t i = 0; i < lr; ++i) {
        for (size_t j = 0; j < n; ++j) a(i, j) = delta.matrix(i, j);
        b[i] = target.coords[i];
    }
    // symmetric under the swap: equal coefficients on the two tautological generators
    a(lr, k.left_slots.back()) = ParamPoly(1);
    a(lr, k.right_slots.back()) = ParamPoly(-1);
    return DivClass(fp, solve_generic(a, b));
}

PullbackMap exceptional_restriction(const SpacePtr& blowup) {
    const auto& k = as_blow_up(blowup);
    if (!k.center.exceptional) throw ContractError("blow-up '" + blowup->id() + "' declares no exceptional data");
    const auto& ex = *k.center.exceptional;
    size_t ar = k.ambient->picard_rank();
    PolyMatrix m(ex.space->picard_rank(), blowup->picard_rank());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < ar; ++j) m(i, j) = ex.restriction.matrix(i, j);
        m(i, ar) = ParamPoly(k.exc_sign) * ex.self_class[i];
    }
    return PullbackMap(blowup, ex.space, m);
}

DivClass twisted_tautological(const DivClass& taut, const DivClass& twist) { return taut - twist; }

DivClass untwisted_tautological(const DivClass& taut, const DivClass& twist) { return taut + twist; }

// ---- cohomology ------------------------------------------------------------

long coh_dim_p2(long d, int q) {
    if (q == 0) return d >= 0 ? (d + 1) * (d + 2) / 2 : 0;
    if (q == 2) return d <= -3 ? (-d - 1) * (-d - 2) / 2 : 0;
    return 0;
}

long coh_dim_product_proj(long a, long b, int q) {
    if (a < -10 || a > 10 || b < -10 || b > 10 || q < 0 || q > 4)
        throw ContractError("coh_dim_product_proj: inputs out of range");
    long total = 0;
    for (int i = 0; i <= q; ++i) total += coh_dim_p2(a, i) * coh_dim_p2(b, q - i);
    return total;
}

ParamPoly isotropic_grassmannian_dim(long k, const ParamPoly& m) {
    return ParamPoly(Rat(k)) * m - ParamPoly(Rat(k * (3 * k - 1), 2));
}

}  // namespace towerlab::tower

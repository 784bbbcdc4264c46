#include "towerlab/curves/curve.hpp"

#include "towerlab/exact/linalg.hpp"

namespace towerlab::curves {

namespace {

void require_same(const SpacePtr& a, const SpacePtr& b, const std::string& what) {
    if (a.get() != b.get()) throw tower::SpaceMismatch(what + ": '" + a->id() + "' vs '" + b->id() + "'");
}

// True when `gen` is the tautological generator of a projective bundle below s.
bool is_tautological(const SpacePtr& s, const std::string& g) {
    if (std::holds_alternative<tower::ProjBundleKind>(s->kind()) && s->basis().back() == g) return true;
    for (auto& [parent, emb] : s->parents()) {
        (void)emb;
        if (parent->has_gen(g) && is_tautological(parent, g)) return true;
    }
    return false;
}

PolyVec unit(size_t n, size_t i) {
    PolyVec v(n, ParamPoly());
    v[i] = ParamPoly(1);
    return v;
}

}  // namespace

CurveClass::CurveClass(SpacePtr s, PolyVec v, std::string prov)
    : space(std::move(s)), vec(std::move(v)), provenance(std::move(prov)) {
    if (!space) throw ContractError("curve class without a space");
    if (vec.size() != space->picard_rank())
        throw DimensionMismatch("curve on '" + space->id() + "' has " + std::to_string(vec.size()) +
                                " pairings, Picard rank is " + std::to_string(space->picard_rank()));
}

CurveClass realize(const AtomicCurveSpec& spec) {
    if (auto* s = std::get_if<LineInProjFiber>(&spec)) {
        if (!is_tautological(s->space, s->gen))
            throw ContractError("'" + s->gen + "' is not a tautological generator of '" + s->space->id() + "'");
        return CurveClass(s->space, unit(s->space->picard_rank(), s->space->index_of(s->gen)),
                          "line in " + s->gen + "-fiber");
    }
    if (auto* s = std::get_if<LineInExceptionalFiber>(&spec)) {
        PullbackMap res = tower::exceptional_restriction(s->blowup);
        const SpacePtr& ex = res.target;
        if (!is_tautological(ex, s->direction))
            throw ContractError("'" + s->direction + "' is not a fiber direction of '" + ex->id() + "'");
        size_t row = ex->index_of(s->direction);
        return CurveClass(s->blowup, res.matrix.row(row), "exceptional line along " + s->direction);
    }
    if (auto* s = std::get_if<StrictTransform>(&spec)) {
        auto* k = std::get_if<tower::BlowUpKind>(&s->blowup->kind());
        if (!k) throw ContractError("strict transform needs a blow-up");
        if (s->mult_at_center < 0) throw ContractError("strict transform multiplicity must be >= 0");
        require_same(s->ambient.space, k->ambient, "strict transform of a curve on the wrong space");
        PolyVec v = s->ambient.vec;
        v.push_back(ParamPoly(Rat(k->exc_sign * s->mult_at_center)));
        return CurveClass(s->blowup, v, "strict transform (mult " + std::to_string(s->mult_at_center) + ")");
    }
    if (auto* s = std::get_if<DeclaredSection>(&spec)) return CurveClass(s->space, s->vec, "declared: " + s->note);
    const auto& p = std::get<PushedForward>(spec);
    require_same(p.curve.space, p.restriction.target, "pushforward restriction must land on the curve's space");
    PolyVec v = p.restriction.matrix.transpose() * p.curve.vec;
    return CurveClass(p.restriction.source, v, "pushforward of " + p.curve.provenance);
}

ParamPoly intersect(const CurveClass& c, const DivClass& d) {
    require_same(c.space, d.space, "intersecting across spaces");
    return dot(c.vec, d.coords);
}

ParamPoly intersect(const AtomicCurveSpec& c, const DivClass& d) { return intersect(realize(c), d); }

CurveClass combine(const std::vector<std::pair<ParamPoly, CurveClass>>& terms) {
    if (terms.empty()) throw ContractError("empty curve combination");
    SpacePtr s = terms.front().second.space;
    PolyVec v(s->picard_rank(), ParamPoly());
    for (const auto& [k, c] : terms) {
        require_same(c.space, s, "combining curves on different spaces");
        for (size_t i = 0; i < v.size(); ++i) v[i] += k * c.vec[i];
    }
    return CurveClass(s, v, "combination");
}

PolyMatrix pairing_table(const std::vector<CurveClass>& curves, const std::vector<DivClass>& divisors) {
    PolyMatrix t(curves.size(), divisors.size());
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = 0; j < divisors.size(); ++j) t(i, j) = intersect(curves[i], divisors[j]);
    return t;
}

PolyVec solve_pushforward(const PolyVec& observed, const PolyMatrix& table) {
    if (!table.square()) throw ContractError("pushforward table must be square");
    if (observed.size() != table.cols()) throw DimensionMismatch("observed pairings do not match the table");
    try {
        return solve_generic(table.transpose(), observed);
    } catch (const Underdetermined&) {
        throw ContractError("pushforward table is singular");
    }
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NEGATIVE: return "negative";
        case Verdict::NOT_NEGATIVE: return "not negative";
        default: return "undecided";
    }
}

Verdict negative_for_all_n(const ParamPoly& p) {
    if (p.eval(Rat(3)) >= Rat(0)) return Verdict::NOT_NEGATIVE;
    // Substitute n = 3 + m: all coefficients <= 0 with a negative constant certifies p < 0 for m >= 0.
    ParamPoly shifted;
    ParamPoly power(1);
    ParamPoly base = ParamPoly::n() + ParamPoly(3);
    for (int e = 0; e <= p.degree(); ++e) {
        shifted += ParamPoly(p.coeff(e)) * power;
        if (e < p.degree()) power *= base;
    }
    bool all_nonpos = true;
    for (const auto& [e, c] : shifted.coeffs())
        if (c > Rat(0)) all_nonpos = false;
    if (all_nonpos) return Verdict::NEGATIVE;
    for (int k = 4; k <= 64; ++k)
        if (p.eval(Rat(k)) >= Rat(0)) return Verdict::NOT_NEGATIVE;
    return Verdict::UNDECIDED;
}

std::vector<KnegEntry> kneg_check(const DivClass& k, const std::vector<CurveClass>& curves) {
    std::vector<KnegEntry> out;
    for (const auto& c : curves) {
        ParamPoly v = intersect(c, k);
        out.push_back({v, negative_for_all_n(v)});
    }
    return out;
}

}  // namespace towerlab::curves

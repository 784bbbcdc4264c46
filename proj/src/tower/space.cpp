#include "towerlab/tower/space.hpp"

#include <algorithm>
#include <set>

namespace towerlab::tower {

namespace {

void require_same(const SpacePtr& a, const SpacePtr& b, const char* what) {
    if (a.get() != b.get())
        throw SpaceMismatch(std::string(what) + ": '" + (a ? a->id() : "?") + "' vs '" + (b ? b->id() : "?") + "'");
}

PolyMatrix prefix_embedding(size_t inner, size_t outer) {
    PolyMatrix m(outer, inner);
    for (size_t i = 0; i < inner; ++i) m(i, i) = ParamPoly(1);
    return m;
}

PolyMatrix slot_embedding(const std::vector<size_t>& slots, size_t outer) {
    PolyMatrix m(outer, slots.size());
    for (size_t j = 0; j < slots.size(); ++j) m(slots[j], j) = ParamPoly(1);
    return m;
}

// Embedding of an ancestor's basis into a descendant, found by walking parents.
std::optional<PolyMatrix> find_embedding(const SpacePtr& ancestor, const Space& s) {
    if (&s == ancestor.get()) return PolyMatrix::identity(s.picard_rank());
    for (auto& [parent, emb] : s.parents()) {
        auto inner = find_embedding(ancestor, *parent);
        if (inner) return emb * *inner;
    }
    return std::nullopt;
}

}  // namespace

bool positive_at_samples(const ParamPoly& p) {
    for (int k = 3; k <= 3 + ParamPoly::kMaxDegree; ++k)
        if (p.eval(Rat(k)) <= Rat(0)) return false;
    return true;
}

DivClass::DivClass(SpacePtr s, PolyVec c) : space(std::move(s)), coords(std::move(c)) {
    if (!space) throw ContractError("divisor class without a space");
    if (coords.size() != space->picard_rank())
        throw DimensionMismatch("divisor class on '" + space->id() + "' has " + std::to_string(coords.size()) +
                                " coordinates, Picard rank is " + std::to_string(space->picard_rank()));
}

DivClass DivClass::operator-() const {
    DivClass r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

DivClass& DivClass::operator+=(const DivClass& o) {
    require_same(space, o.space, "adding classes on different spaces");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

DivClass& DivClass::operator-=(const DivClass& o) {
    require_same(space, o.space, "subtracting classes on different spaces");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

DivClass operator*(const ParamPoly& k, const DivClass& d) {
    DivClass r = d;
    for (auto& c : r.coords) c = k * c;
    return r;
}

bool operator==(const DivClass& a, const DivClass& b) { return a.space.get() == b.space.get() && a.coords == b.coords; }

FormalBundle::FormalBundle(ParamPoly r, DivClass c) : space(c.space), rank(std::move(r)), c1(std::move(c)) {}

PullbackMap::PullbackMap(SpacePtr src, SpacePtr tgt, PolyMatrix m, bool ident)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)), identification(ident) {
    if (!source || !target) throw ContractError("pullback map needs both spaces");
    if (matrix.cols() != source->picard_rank() || matrix.rows() != target->picard_rank())
        throw DimensionMismatch("pullback '" + source->id() + "' -> '" + target->id() + "' has shape " +
                                std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()));
    if (identification && !matrix.square()) throw ContractError("identification must be square");
}

Space::Space(std::string id, SpaceKind kind, std::vector<std::string> basis, ParamPoly dim)
    : id_(std::move(id)), kind_(std::move(kind)), basis_(std::move(basis)), dim_(std::move(dim)) {
    std::set<std::string> seen;
    for (const auto& b : basis_)
        if (!seen.insert(b).second) throw ContractError("generator '" + b + "' repeated in space '" + id_ + "'");
}

SpacePtr Space::formal_base(std::string id, std::vector<std::string> pic_names, ParamPoly dim,
                            std::optional<PolyVec> canonical) {
    if (canonical && canonical->size() != pic_names.size())
        throw DimensionMismatch("canonical class of '" + id + "' has wrong length");
    auto s = std::shared_ptr<Space>(new Space(id, FormalBaseKind{canonical}, pic_names, dim));
    s->own_from_ = 0;
    return s;
}

SpacePtr Space::proj_bundle(std::string id, FormalBundle bundle, std::string taut_gen) {
    if (!positive_at_samples(bundle.rank))
        throw ContractError("projective bundle '" + id + "' needs rank >= 1, got " + bundle.rank.str());
    SpacePtr base = bundle.space;
    auto basis = base->basis();
    basis.push_back(taut_gen);
    ParamPoly dim = base->dim() + bundle.rank - ParamPoly(1);
    auto s = std::shared_ptr<Space>(new Space(id, ProjBundleKind{base, bundle}, basis, dim));
    s->own_from_ = base->picard_rank();
    return s;
}

SpacePtr Space::blow_up(std::string id, SpacePtr ambient, CenterSpec center, std::string exc_gen, int exc_sign) {
    if (exc_sign != 1 && exc_sign != -1) throw ContractError("exceptional sign must be +1 or -1");
    if (!positive_at_samples(center.codim))
        throw ContractError("blow-up '" + id + "' needs center codimension >= 1, got " + center.codim.str());
    if (center.exceptional) {
        const auto& ex = *center.exceptional;
        require_same(ex.restriction.source, ambient, "center restriction must start at the ambient");
        require_same(ex.restriction.target, ex.space, "center restriction must land on the exceptional space");
        if (ex.self_class.size() != ex.space->picard_rank())
            throw DimensionMismatch("exceptional self class of '" + id + "' has wrong length");
        if (ex.space->dim() != ambient->dim() - ParamPoly(1))
            throw ContractError("exceptional space of '" + id + "' must have dimension " +
                                (ambient->dim() - ParamPoly(1)).str() + ", has " + ex.space->dim().str());
    }
    auto basis = ambient->basis();
    basis.push_back(exc_gen);
    auto s = std::shared_ptr<Space>(new Space(id, BlowUpKind{ambient, std::move(center), exc_sign}, basis, ambient->dim()));
    s->own_from_ = ambient->picard_rank();
    return s;
}

SpacePtr Space::fiber_product(std::string id, SpacePtr left, SpacePtr right, SpacePtr over) {
    auto el = find_embedding(over, *left);
    auto er = find_embedding(over, *right);
    if (!el || !er) throw ContractError("fiber product '" + id + "': '" + over->id() + "' is not below both factors");
    size_t k = over->picard_rank();
    // The base basis must embed by distinct unit columns into each factor.
    auto unit_rows = [&](const PolyMatrix& e, const SpacePtr& factor) {
        std::vector<long> row_of(factor->picard_rank(), -1);
        for (size_t j = 0; j < e.cols(); ++j) {
            long hit = -1;
            for (size_t i = 0; i < e.rows(); ++i) {
                if (e(i, j).is_zero()) continue;
                if (e(i, j) != ParamPoly(1) || hit != -1) {
                    hit = -2;
                    break;
                }
                hit = static_cast<long>(i);
            }
            if (hit < 0 || row_of[hit] >= 0)
                throw ContractError("fiber product '" + id + "': base classes do not embed as generators");
            row_of[hit] = static_cast<long>(j);
        }
        return row_of;
    };
    auto lrow = unit_rows(*el, left);
    auto rrow = unit_rows(*er, right);
    std::vector<std::string> basis = over->basis();
    std::vector<size_t> lslots(left->picard_rank()), rslots(right->picard_rank());
    for (size_t i = 0; i < lrow.size(); ++i) {
        if (lrow[i] >= 0) {
            lslots[i] = static_cast<size_t>(lrow[i]);
        } else {
            lslots[i] = basis.size();
            basis.push_back(left->basis()[i]);
        }
    }
    for (size_t i = 0; i < rrow.size(); ++i) {
        if (rrow[i] >= 0) {
            rslots[i] = static_cast<size_t>(rrow[i]);
        } else {
            rslots[i] = basis.size();
            basis.push_back(right->basis()[i]);
        }
    }
    ParamPoly dim = left->dim() + right->dim() - over->dim();
    auto s = std::shared_ptr<Space>(
        new Space(id, FiberProductKind{left, right, over, lslots, rslots}, basis, dim));
    s->own_from_ = k;
    return s;
}

SpacePtr Space::divisor_in(std::string id, const DivClass& divisor) {
    SpacePtr amb = divisor.space;
    auto s = std::shared_ptr<Space>(
        new Space(id, DivisorInKind{amb, divisor.coords}, amb->basis(), amb->dim() - ParamPoly(1)));
    s->own_from_ = amb->picard_rank();
    return s;
}

std::string Space::kind_name() const {
    switch (kind_.index()) {
        case 0: return "formal_base";
        case 1: return "proj_bundle";
        case 2: return "blow_up";
        case 3: return "fiber_product";
        default: return "divisor_in";
    }
}

size_t Space::index_of(const std::string& g) const {
    auto it = std::find(basis_.begin(), basis_.end(), g);
    if (it == basis_.end()) throw ContractError("space '" + id_ + "' has no generator '" + g + "'");
    return static_cast<size_t>(it - basis_.begin());
}

bool Space::has_gen(const std::string& g) const {
    return std::find(basis_.begin(), basis_.end(), g) != basis_.end();
}

std::vector<std::string> Space::own_generators() const {
    return std::vector<std::string>(basis_.begin() + static_cast<long>(own_from_), basis_.end());
}

std::vector<std::pair<SpacePtr, PolyMatrix>> Space::parents() const {
    std::vector<std::pair<SpacePtr, PolyMatrix>> out;
    size_t r = picard_rank();
    if (auto* k = std::get_if<ProjBundleKind>(&kind_)) {
        out.emplace_back(k->base, prefix_embedding(k->base->picard_rank(), r));
    } else if (auto* k = std::get_if<BlowUpKind>(&kind_)) {
        out.emplace_back(k->ambient, prefix_embedding(k->ambient->picard_rank(), r));
    } else if (auto* k = std::get_if<FiberProductKind>(&kind_)) {
        out.emplace_back(k->left, slot_embedding(k->left_slots, r));
        out.emplace_back(k->right, slot_embedding(k->right_slots, r));
    } else if (auto* k = std::get_if<DivisorInKind>(&kind_)) {
        out.emplace_back(k->ambient, PolyMatrix::identity(r));
    }
    return out;
}

DivClass zero_class(const SpacePtr& s) { return DivClass(s, PolyVec(s->picard_rank(), ParamPoly())); }

DivClass gen(const SpacePtr& s, const std::string& name) {
    DivClass d = zero_class(s);
    d.coords[s->index_of(name)] = ParamPoly(1);
    return d;
}

}  // namespace towerlab::tower

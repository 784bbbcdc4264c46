#include "interpreter.hpp"

#include <algorithm>

#include "towerlab/exact/linalg.hpp"
#include "towerlab/local/enumerate.hpp"

namespace towerlab::scenario::detail {

namespace {

const char* kSections[] = {"spaces", "bundles", "divisors", "maps", "curves", "chains", "models"};

std::string op_of(const json& j, const std::string& where) {
    const json& op = need(j, "op", where);
    if (!op.is_string()) throw ContractError(where + ": 'op' must be a string");
    return op.get<std::string>();
}

Value::Map sweep_value(const local::SweepReport& r, bool with_positives) {
    Value::Map m{{"count", Rat(r.count)}, {"agree", Rat(r.agree)}};
    if (with_positives) m["positives"] = Rat(r.positives);
    return m;
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const local::DegenerateModel*>(&e)) return "degenerate-model";
    if (dynamic_cast<const local::NotInHomOmega*>(&e)) return "not-in-hom-omega";
    if (dynamic_cast<const curves::ChainHypothesisError*>(&e)) return "chain-hypothesis";
    if (dynamic_cast<const tower::SpaceMismatch*>(&e)) return "space-mismatch";
    if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension-mismatch";
    if (dynamic_cast<const DegreeOverflow*>(&e)) return "degree-overflow";
    if (dynamic_cast<const NoSolution*>(&e)) return "no-solution";
    if (dynamic_cast<const Underdetermined*>(&e)) return "underdetermined";
    if (dynamic_cast<const ContractError*>(&e)) return "contract-error";
    return "error";
}

}  // namespace

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ContractError(where + ": missing '" + key + "'");
    return j.at(key);
}

std::string linear_form(const RatVec& coeffs, const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Rat& c = coeffs[i];
        if (c.is_zero()) continue;
        Rat a = c.abs();
        if (s.empty())
            s += c.sign() < 0 ? "-" : "";
        else
            s += c.sign() < 0 ? " - " : " + ";
        if (a != Rat(1)) s += a.str() + (a.is_integer() ? "" : "*");
        s += names[i];
    }
    return s.empty() ? "0" : s;
}

Interp::Interp(const json& doc, std::optional<Rat> n) : doc_(doc), n_(std::move(n)) {
    for (const char* section : kSections) {
        if (!doc_.contains(section)) continue;
        for (const auto& e : doc_.at(section)) index_.emplace(e.at("id").get<std::string>(), Entry{section, &e});
    }
}

const Interp::Entry& Interp::entry(const std::string& id, const char* section) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw SemanticError(id, "is not defined");
    if (it->second.section != section)
        throw SemanticError(id, "is a " + it->second.section + " entry, not one of " + section);
    return it->second;
}

template <typename T, typename Build>
const T& Interp::named(std::map<std::string, T>& cache, const std::string& id, const char* section,
                       Build build) const {
    if (auto it = cache.find(id); it != cache.end()) return it->second;
    const Entry& e = entry(id, section);
    if (building_.count(id)) throw SemanticError(id, "is defined in terms of itself");
    building_.insert(id);
    try {
        T v = build(*e.body);
        building_.erase(id);
        return cache.emplace(id, std::move(v)).first->second;
    } catch (const SemanticError&) {
        building_.erase(id);
        throw;
    } catch (const std::exception& ex) {
        building_.erase(id);
        throw SemanticError(id, ex.what());
    }
}

std::vector<Rat> Interp::sample_points() const {
    if (n_) return {*n_};
    return {Rat(3), Rat(4), Rat(5), Rat(6), Rat(7)};
}

ParamPoly Interp::poly(const json& j) const {
    ParamPoly p;
    if (j.is_number_integer())
        p = ParamPoly(j.get<long>());
    else if (j.is_string())
        p = ParamPoly::parse(j.get<std::string>());
    else
        throw ContractError("expected a polynomial in n, got " + j.dump());
    return n_ ? ParamPoly(p.eval(*n_)) : p;
}

Rat Interp::rat(const json& j) const {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw ContractError("expected a rational number, got " + j.dump());
}

RatMatrix Interp::rat_matrix(const json& rows) const {
    if (!rows.is_array()) throw ContractError("expected a list of rows");
    std::vector<RatVec> out;
    for (const auto& r : rows) {
        RatVec v;
        for (const auto& x : r) v.push_back(rat(x));
        out.push_back(v);
    }
    return RatMatrix::from_rows(out, out.empty() ? 0 : out.front().size());
}

std::string Interp::label(const json& ref) const {
    if (ref.is_string()) {
        auto s = ref.get<std::string>();
        auto at = s.find('@');
        return at == std::string::npos ? s : s.substr(0, at);
    }
    if (ref.is_object() && ref.contains("op") && ref["op"] == "gen") return ref.at("name").get<std::string>();
    return ref.dump();
}

// ---- spaces ------------------------------------------------------------------

SpacePtr Interp::space(const json& ref) const {
    if (!ref.is_string()) throw ContractError("spaces are referenced by id, got " + ref.dump());
    auto id = ref.get<std::string>();
    return named(spaces_, id, "spaces", [&](const json& e) { return build_space(id, e); });
}

SpacePtr Interp::build_space(const std::string& id, const json& e) const {
    std::string kind = need(e, "kind", id).get<std::string>();
    if (kind == "formal_base") {
        std::vector<std::string> pic;
        for (const auto& g : need(e, "pic", id)) pic.push_back(g.get<std::string>());
        std::optional<PolyVec> canonical;
        if (e.contains("canonical")) {
            PolyVec k;
            for (const auto& c : e["canonical"]) k.push_back(poly(c));
            canonical = k;
        }
        return tower::Space::formal_base(id, pic, poly(need(e, "dim", id)), canonical);
    }
    if (kind == "proj_bundle")
        return tower::Space::proj_bundle(id, bundle(need(e, "bundle", id)), need(e, "gen", id).get<std::string>());
    if (kind == "blow_up") {
        tower::CenterSpec center{poly(need(e, "codim", id)), std::nullopt};
        if (e.contains("exceptional")) {
            const json& x = e["exceptional"];
            SpacePtr ex = space(need(x, "space", id));
            DivClass self = div(need(x, "self_class", id));
            if (self.space.get() != ex.get())
                throw tower::SpaceMismatch("exceptional self class must live on '" + ex->id() + "'");
            center.exceptional = tower::ExceptionalData{ex, map(need(x, "restriction", id)), self.coords};
        }
        int sign = e.value("sign", 1);
        return tower::Space::blow_up(id, space(need(e, "ambient", id)), center, need(e, "gen", id).get<std::string>(),
                                     sign);
    }
    if (kind == "fiber_product")
        return tower::Space::fiber_product(id, space(need(e, "left", id)), space(need(e, "right", id)),
                                           space(need(e, "over", id)));
    if (kind == "divisor_in") return tower::Space::divisor_in(id, div(need(e, "divisor", id)));
    throw ContractError("unknown space kind '" + kind + "'");
}

// ---- bundles -----------------------------------------------------------------

FormalBundle Interp::bundle(const json& ref) const {
    if (ref.is_string()) {
        auto id = ref.get<std::string>();
        return named(bundles_, id, "bundles", [&](const json& e) { return build_bundle(e); });
    }
    return build_bundle(ref);
}

FormalBundle Interp::build_bundle(const json& e) const {
    const std::string where = "bundle";
    std::string op = op_of(e, where);
    if (op == "trivial") return tower::trivial_bundle(space(need(e, "space", where)), poly(need(e, "rank", where)));
    if (op == "formal") {
        DivClass c1 = div(need(e, "c1", where));
        if (c1.space.get() != space(need(e, "space", where)).get())
            throw tower::SpaceMismatch("bundle c1 lives on another space");
        return FormalBundle(poly(need(e, "rank", where)), c1);
    }
    if (op == "line") return tower::line_bundle(div(need(e, "c1", where)));
    if (op == "taut_sub") return tower::tautological_sub(space(need(e, "space", where)));
    if (op == "dual") return tower::dual(bundle(need(e, "of", where)));
    if (op == "tensor_line") return tower::tensor_line(bundle(need(e, "of", where)), div(need(e, "line", where)));
    if (op == "tensor") return tower::tensor(bundle(need(e, "a", where)), bundle(need(e, "b", where)));
    if (op == "quotient") return tower::quotient(bundle(need(e, "total", where)), bundle(need(e, "sub", where)));
    if (op == "kernel") return tower::kernel(bundle(need(e, "total", where)), bundle(need(e, "quot", where)));
    if (op == "extension") return tower::extension(bundle(need(e, "sub", where)), bundle(need(e, "quot", where)));
    if (op == "dsum") return tower::dsum(bundle(need(e, "a", where)), bundle(need(e, "b", where)));
    if (op == "sym2") return tower::sym2(bundle(need(e, "of", where)));
    if (op == "symk") return tower::symk(bundle(need(e, "of", where)), need(e, "k", where).get<long>());
    if (op == "wedge_top") return tower::wedge_top(bundle(need(e, "of", where)));
    if (op == "pull") {
        if (e.contains("map")) return tower::pull_bundle(map(e["map"]), bundle(need(e, "of", where)));
        return tower::pull_bundle(bundle(need(e, "of", where)), space(need(e, "to", where)));
    }
    if (op == "relative_tangent") return tower::relative_tangent(space(need(e, "space", where)));
    throw ContractError("unknown bundle op '" + op + "'");
}

// ---- divisors ----------------------------------------------------------------

DivClass Interp::div(const json& ref) const {
    if (ref.is_string()) {
        auto s = ref.get<std::string>();
        auto at = s.find('@');
        if (at != std::string::npos) return tower::gen(space(json(s.substr(at + 1))), s.substr(0, at));
        return named(divs_, s, "divisors", [&](const json& e) { return build_div(need(e, "expr", s)); });
    }
    return build_div(ref);
}

DivClass Interp::build_div(const json& e) const {
    const std::string where = "divisor";
    std::string op = op_of(e, where);
    if (op == "gen") return tower::gen(space(need(e, "space", where)), need(e, "name", where).get<std::string>());
    if (op == "zero") return tower::zero_class(space(need(e, "space", where)));
    if (op == "coords") {
        PolyVec v;
        for (const auto& c : need(e, "coords", where)) v.push_back(poly(c));
        return DivClass(space(need(e, "space", where)), v);
    }
    if (op == "combo") {
        SpacePtr s = space(need(e, "space", where));
        DivClass d = tower::zero_class(s);
        for (auto& [g, c] : need(e, "terms", where).items()) d += poly(c) * tower::gen(s, g);
        return d;
    }
    if (op == "sum") {
        std::optional<DivClass> acc;
        for (const auto& t : need(e, "terms", where)) {
            if (!t.is_array() || t.size() != 2) throw ContractError("sum terms are [coefficient, divisor] pairs");
            DivClass d = poly(t[0]) * div(t[1]);
            acc = acc ? *acc + d : d;
        }
        if (!acc) throw ContractError("empty divisor sum");
        return *acc;
    }
    if (op == "c1") return bundle(need(e, "bundle", where)).c1;
    if (op == "canonical") return tower::canonical_class(space(need(e, "space", where)));
    if (op == "ambient_canonical")
        return tower::ambient_canonical(space(need(e, "space", where)), bundle(need(e, "normal", where)));
    if (op == "blowup_ambient_canonical")
        return tower::blowup_ambient_canonical(space(need(e, "space", where)), div(need(e, "restricted", where)),
                                               poly(need(e, "codim", where)));
    if (op == "pullback") return tower::pullback(map(need(e, "map", where)), div(need(e, "of", where)));
    if (op == "tower_pullback") {
        DivClass d = div(need(e, "of", where));
        return tower::pullback(tower::tower_pullback(d.space, space(need(e, "to", where))), d);
    }
    if (op == "diagonal_ideal") return tower::diagonal_ideal(space(need(e, "space", where)));
    if (op == "relative_cotangent") return tower::relative_cotangent_class(space(need(e, "space", where)));
    if (op == "twisted") return tower::twisted_tautological(div(need(e, "taut", where)), div(need(e, "twist", where)));
    if (op == "untwisted")
        return tower::untwisted_tautological(div(need(e, "taut", where)), div(need(e, "twist", where)));
    if (op == "transport") {
        std::vector<tower::TransportStep> via;
        for (const auto& s : need(e, "via", where)) via.push_back({map(need(s, "map", where)), s.value("inverted", false)});
        std::set<std::string> drop;
        if (e.contains("drop"))
            for (const auto& g : e["drop"]) drop.insert(g.get<std::string>());
        return tower::transport_class(div(need(e, "of", where)), via, drop, space(need(e, "onto", where)));
    }
    throw ContractError("unknown divisor op '" + op + "'");
}

// ---- maps --------------------------------------------------------------------

PullbackMap Interp::map(const json& ref) const {
    if (ref.is_string()) {
        auto id = ref.get<std::string>();
        return named(maps_, id, "maps", [&](const json& e) { return build_map(e); });
    }
    return build_map(ref);
}

PullbackMap Interp::build_map(const json& e) const {
    const std::string where = "map";
    std::string kind = e.contains("kind") ? e["kind"].get<std::string>() : op_of(e, where);
    if (kind == "tower") return tower::tower_pullback(space(need(e, "from", where)), space(need(e, "to", where)));
    if (kind == "identity") return tower::identity_map(space(need(e, "space", where)));
    if (kind == "columns") {
        std::vector<DivClass> cols;
        for (const auto& c : need(e, "columns", where)) cols.push_back(div(c));
        return tower::map_from_columns(space(need(e, "source", where)), space(need(e, "target", where)), cols,
                                       e.value("identification", false));
    }
    if (kind == "matrix") {
        SpacePtr src = space(need(e, "source", where)), tgt = space(need(e, "target", where));
        for (auto [key, s] : {std::pair{"source_basis", src}, std::pair{"target_basis", tgt}}) {
            if (!e.contains(key)) continue;
            if (e[key].get<std::vector<std::string>>() != s->basis())
                throw ContractError(std::string("declared ") + key + " does not match the basis of '" + s->id() + "'");
        }
        const json& rows = need(e, "rows", where);
        PolyMatrix m(tgt->picard_rank(), src->picard_rank());
        if (rows.size() != m.rows()) throw DimensionMismatch("matrix has the wrong number of rows");
        for (size_t i = 0; i < m.rows(); ++i) {
            if (rows[i].size() != m.cols()) throw DimensionMismatch("matrix row of the wrong length");
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) = poly(rows[i][j]);
        }
        return PullbackMap(src, tgt, m, e.value("identification", false));
    }
    if (kind == "compose") {
        const json& parts = need(e, "maps", where);
        if (parts.empty()) throw ContractError("empty composition");
        PullbackMap acc = map(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i) acc = tower::compose(acc, map(parts[i]));
        return acc;
    }
    if (kind == "inverse") return tower::inverse(map(need(e, "of", where)));
    if (kind == "diagonal_restriction") return tower::diagonal_restriction(space(need(e, "space", where)));
    if (kind == "exceptional_restriction") return tower::exceptional_restriction(space(need(e, "space", where)));
    throw ContractError("unknown map kind '" + kind + "'");
}

// ---- curves ------------------------------------------------------------------

CurveClass Interp::curve(const json& ref) const {
    if (ref.is_string()) {
        auto id = ref.get<std::string>();
        return named(curves_, id, "curves", [&](const json& e) {
            CurveClass c = build_curve(e);
            c.provenance = id + ": " + c.provenance;
            return c;
        });
    }
    return build_curve(ref);
}

CurveClass Interp::build_curve(const json& e) const {
    const std::string where = "curve";
    std::string kind = need(e, "kind", where).get<std::string>();
    if (kind == "fiber_line")
        return curves::realize(curves::LineInProjFiber{space(need(e, "space", where)), need(e, "gen", where).get<std::string>()});
    if (kind == "exceptional_line")
        return curves::realize(
            curves::LineInExceptionalFiber{space(need(e, "space", where)), need(e, "direction", where).get<std::string>()});
    if (kind == "strict_transform")
        return curves::realize(curves::StrictTransform{space(need(e, "space", where)), curve(need(e, "ambient", where)),
                                                       e.value("mult", 1L)});
    if (kind == "declared") {
        PolyVec v;
        for (const auto& c : need(e, "vector", where)) v.push_back(poly(c));
        return curves::realize(curves::DeclaredSection{space(need(e, "space", where)), v, e.value("note", "")});
    }
    if (kind == "pushforward")
        return curves::realize(curves::PushedForward{curve(need(e, "curve", where)), map(need(e, "restriction", where))});
    if (kind == "combination") {
        std::vector<std::pair<ParamPoly, CurveClass>> terms;
        for (const auto& t : need(e, "terms", where)) terms.emplace_back(poly(t.at(0)), curve(t.at(1)));
        return curves::combine(terms);
    }
    throw ContractError("unknown curve kind '" + kind + "'");
}

// ---- chains and models -------------------------------------------------------

const NamedChain& Interp::chain(const json& ref) const {
    if (!ref.is_string()) throw ContractError("chains are referenced by id");
    auto id = ref.get<std::string>();
    return named(chains_, id, "chains", [&](const json& e) { return build_chain(e); });
}

NamedChain Interp::build_chain(const json& e) const {
    const std::string where = "chain";
    NamedChain out;
    out.spec.base_space = space(need(e, "base_space", where));
    for (const auto& c : need(e, "base_cone", where)) out.spec.base_cone.push_back(curve(c));
    for (const auto& s : need(e, "steps", where)) {
        std::vector<CurveClass> cs;
        std::vector<std::string> labels;
        for (const auto& c : need(s, "curves", where)) {
            cs.push_back(curve(c));
            labels.push_back(label(c));
        }
        auto morphism = [&](const json& m) {
            curves::Morphism out_m{need(m, "name", where).get<std::string>(), std::nullopt, {}, m.value("note", "")};
            if (m.contains("map")) out_m.pullback = map(m["map"]);
            if (m.contains("contracts")) {
                for (const auto& c : m["contracts"]) {
                    auto it = std::find(labels.begin(), labels.end(), label(c));
                    if (it == labels.end()) throw ContractError("contracted curve " + c.dump() + " is not in the step");
                    out_m.declared_contracted.push_back(it - labels.begin());
                }
            }
            return out_m;
        };
        out.spec.steps.push_back({space(need(s, "space", where)), cs, morphism(need(s, "c_prime", where)),
                                  morphism(need(s, "c_double_prime", where))});
        out.final_labels = labels;
    }
    return out;
}

const Model& Interp::model(const json& ref) const {
    if (!ref.is_string()) throw ContractError("models are referenced by id");
    auto id = ref.get<std::string>();
    return named(models_, id, "models", [&](const json& e) { return build_model(e); });
}

Model Interp::build_model(const json& e) const {
    const std::string where = "model";
    std::string kind = need(e, "kind", where).get<std::string>();
    if (kind == "symplectic") {
        if (e.contains("standard")) return local::SymplecticSpace::standard(e["standard"].get<size_t>());
        return local::SymplecticSpace(rat_matrix(need(e, "gram", where)));
    }
    if (kind == "quad_w") {
        if (e.contains("gram")) return local::QuadSpaceW(rat_matrix(e["gram"]));
        return local::QuadSpaceW::hyperbolic();
    }
    if (kind == "hom") {
        std::vector<RatVec> cols;
        for (const auto& c : need(e, "columns", where)) {
            RatVec v;
            for (const auto& x : c) v.push_back(rat(x));
            cols.push_back(v);
        }
        size_t rows = cols.empty() ? 0 : cols.front().size();
        return local::HomWE(RatMatrix::from_columns(cols, rows));
    }
    if (kind == "ext_pair") {
        auto vec = [&](const char* key) {
            RatVec v;
            for (const auto& x : need(e, key, where)) v.push_back(rat(x));
            return v;
        };
        if (e.contains("pairing")) return local::ExtPair(vec("e12"), vec("e21"), rat_matrix(e["pairing"]));
        return local::ExtPair(vec("e12"), vec("e21"));
    }
    if (kind == "matrix") return rat_matrix(need(e, "rows", where));
    throw ContractError("unknown model kind '" + kind + "'");
}

// ---- whole-document passes ---------------------------------------------------

void Interp::preflight() {
    if (!doc_.contains("preflight")) return;
    for (const auto& p : doc_["preflight"]) {
        std::string name = need(p, "check", "preflight").get<std::string>();
        Value got;
        try {
            got = compute(need(p, "compute", name));
        } catch (const SemanticError&) {
            throw;
        } catch (const std::exception& ex) {
            throw SemanticError(name, ex.what());
        }
        auto want = decode_like(need(p, "value", name), got);
        if (!want || encode(*want, n_) != encode(got, n_))
            throw SemanticError(name, "preflight check failed: expected " + p["value"].dump() + ", computed " +
                                          encode(got, n_).dump());
    }
}

void Interp::build_all() {
    for (const auto& [id, e] : index_) {
        if (e.section == "spaces") space(json(id));
        else if (e.section == "bundles") bundle(json(id));
        else if (e.section == "divisors") div(json(id));
        else if (e.section == "maps") map(json(id));
        else if (e.section == "curves") curve(json(id));
        else if (e.section == "chains") chain(json(id));
        else if (e.section == "models") model(json(id));
    }
}

// ---- checks ------------------------------------------------------------------

Value Interp::compute(const json& j) const {
    std::string op = op_of(j, "compute");
    if (op == "expect_error") {
        try {
            compute(need(j, "compute", op));
        } catch (const SemanticError& e) {
            throw;
        } catch (const std::exception& e) {
            return error_kind(e);
        }
        return "no-error";
    }
    static const std::set<std::string> local_ops = {
        "is_isotropic",          "stabilizer_class_omega", "stabilizer_class_sigma", "yoneda_omega",
        "yoneda_sigma",          "po2_act",                "normal_cone_quadric",    "regular_sequence",
        "fixed_locus_incidence", "isotropy_enumeration",   "isotropy_samples",       "stabilizer_family_sweep",
        "sigma_family_sweep"};
    if (local_ops.count(op)) return compute_local(op, j);
    return compute_tower(op, j);
}

Value Interp::compute_tower(const std::string& op, const json& j) const {
    auto curve_list = [&](const json& refs) {
        std::vector<CurveClass> out;
        for (const auto& c : refs) out.push_back(curve(c));
        return out;
    };
    auto div_list = [&](const json& refs) {
        std::vector<DivClass> out;
        for (const auto& d : refs) out.push_back(div(d));
        return out;
    };
    auto matrix_of = [&](const json& m) -> PolyMatrix {
        if (m.is_object() && m.contains("rows") && !m.contains("kind") && !m.contains("op")) {
            const json& rows = m["rows"];
            PolyMatrix out(rows.size(), rows.empty() ? 0 : rows[0].size());
            for (size_t i = 0; i < out.rows(); ++i) {
                if (rows[i].size() != out.cols()) throw DimensionMismatch("ragged matrix");
                for (size_t k = 0; k < out.cols(); ++k) out(i, k) = poly(rows[i][k]);
            }
            return out;
        }
        return map(m).matrix;
    };

    if (op == "div") return list_of(div(need(j, "of", op)).coords);
    if (op == "curve") return list_of(curve(need(j, "of", op)).vec);
    if (op == "intersect") return curves::intersect(curve(need(j, "curve", op)), div(need(j, "divisor", op)));
    if (op == "pairing_table")
        return rows_of(curves::pairing_table(curve_list(need(j, "curves", op)), div_list(need(j, "divisors", op))));
    if (op == "map_matrix") return rows_of(map(need(j, "of", op)).matrix);
    if (op == "matrix_product_is_identity")
        return matrix_product_is_identity(matrix_of(need(j, "a", op)), matrix_of(need(j, "b", op)));
    if (op == "bundle") {
        FormalBundle b = bundle(need(j, "of", op));
        return Value::Map{{"rank", b.rank}, {"c1", list_of(b.c1.coords)}};
    }
    if (op == "bundle_rank") return bundle(need(j, "of", op)).rank;
    if (op == "dim") return space(need(j, "space", op))->dim();
    if (op == "codim") return space(need(j, "ambient", op))->dim() - space(need(j, "sub", op))->dim();
    if (op == "picard_rank") return Rat(static_cast<long>(space(need(j, "space", op))->picard_rank()));
    if (op == "coh_product_proj")
        return Rat(tower::coh_dim_product_proj(need(j, "a", op).get<long>(), need(j, "b", op).get<long>(),
                                               need(j, "q", op).get<int>()));
    if (op == "kneg") {
        Value::List out;
        for (const auto& e : curves::kneg_check(div(need(j, "canonical", op)), curve_list(need(j, "curves", op))))
            out.push_back(Value::Map{{"value", e.value}, {"verdict", curves::to_string(e.verdict)}});
        return out;
    }
    if (op == "solve_pushforward") {
        const json& obs = need(j, "observed", op);
        PolyVec observed;
        if (obs.is_array()) {
            for (const auto& x : obs) observed.push_back(poly(x));
        } else {
            CurveClass c = curve(need(obs, "curve", op));
            for (const auto& d : div_list(need(obs, "divisors", op))) observed.push_back(curves::intersect(c, d));
        }
        PolyMatrix table = curves::pairing_table(curve_list(need(j, "curves", op)), div_list(need(j, "divisors", op)));
        return list_of(curves::solve_pushforward(observed, table));
    }
    if (op == "extremal_certificate") {
        const json& refs = need(j, "curves", op);
        std::vector<CurveClass> gens = curve_list(refs);
        std::vector<size_t> face;
        for (const auto& f : need(j, "face", op)) {
            if (f.is_number_integer()) {
                face.push_back(f.get<size_t>());
                continue;
            }
            auto it = std::find(refs.begin(), refs.end(), f);
            if (it == refs.end()) throw ContractError("face member " + f.dump() + " is not a cone generator");
            face.push_back(it - refs.begin());
        }
        long bound = j.value("bound", curves::kDefaultHeightBound);
        std::optional<json> first;
        Value result;
        for (const Rat& p : sample_points()) {
            std::vector<RatVec> vs;
            for (const auto& g : gens) vs.push_back(evaluate(g.vec, p));
            curves::Cone cone(gens.empty() ? 0 : gens.front().vec.size(), vs);
            auto cert = curves::extremal_certificate(cone, face, bound);
            Value::Map m;
            if (cert.status == curves::Certificate::Status::FOUND) {
                RatVec f(cert.functional.begin(), cert.functional.end());
                m = {{"status", "found"},
                     {"functional", list_of(f)},
                     {"values", list_of(cert.values)},
                     {"height", Rat(cert.height)},
                     {"sound", curves::certificate_sound(cone, face, cert.functional)}};
            } else {
                m = {{"status", "inconclusive"}, {"witness", cert.witness ? list_of(*cert.witness) : Value("none")}};
            }
            json enc = encode(m, p);
            if (first && *first != enc) throw ContractError("certificate depends on n");
            first = enc;
            result = m;
        }
        return result;
    }
    if (op == "restriction_kernel") {
        PullbackMap f = map(need(j, "map", op));
        std::vector<CurveClass> basis = curve_list(need(j, "curves", op));
        std::optional<json> first;
        Value result;
        for (const Rat& p : sample_points()) {
            auto rep = curves::restriction_kernel(f, basis, p);
            Value::List ker, perp;
            for (const auto& v : rep.kernel) ker.push_back(list_of(v));
            for (const auto& v : rep.perp) perp.push_back(list_of(v));
            Value::Map m{{"kernel", ker}, {"perp", perp}};
            json enc = encode(m, p);
            if (first && *first != enc) throw ContractError("restriction kernel depends on n");
            first = enc;
            result = m;
        }
        return result;
    }
    if (op == "mori_chain") {
        const NamedChain& c = chain(need(j, "chain", op));
        try {
            curves::mori_propagate(c.spec, n_);
            Value::List cone(c.final_labels.begin(), c.final_labels.end());
            return Value::Map{{"cone", cone}, {"hypotheses_hold", true}, {"failure", ""}};
        } catch (const curves::ChainHypothesisError& e) {
            return Value::Map{{"cone", Value::List{}}, {"hypotheses_hold", false}, {"failure", e.what()}};
        }
    }
    throw ContractError("unknown check op '" + op + "'");
}

Value Interp::compute_local(const std::string& op, const json& j) const {
    auto sympl = [&](const char* key) { return std::get<local::SymplecticSpace>(model(need(j, key, op))); };
    auto pair = [&]() { return std::get<local::ExtPair>(model(need(j, "pair", op))); };
    auto phi = [&]() { return std::get<local::HomWE>(model(need(j, "phi", op))); };
    auto field = [&]() { return PrimeFieldConfig{j.value("p", 3L)}; };

    if (op == "is_isotropic") {
        std::vector<RatVec> vs;
        for (const auto& v : need(j, "vectors", op)) {
            RatVec x;
            for (const auto& c : v) x.push_back(rat(c));
            vs.push_back(x);
        }
        return local::is_isotropic(vs, sympl("space"));
    }
    if (op == "stabilizer_class_omega") {
        local::QuadSpaceW w =
            j.contains("w") ? std::get<local::QuadSpaceW>(model(j["w"])) : local::QuadSpaceW::hyperbolic();
        return local::to_string(local::stabilizer_class_omega(phi(), w, sympl("space")));
    }
    if (op == "stabilizer_class_sigma") return local::to_string(local::stabilizer_class_sigma(pair()));
    if (op == "yoneda_omega") return list_of(local::yoneda_omega(phi(), sympl("space")));
    if (op == "yoneda_sigma") {
        auto s = local::yoneda_sigma(pair());
        return Value::Map{{"alpha", s.alpha}, {"beta", s.beta}, {"in_zero_locus", s.in_zero_locus}};
    }
    if (op == "po2_act") {
        local::Po2Element g = j.contains("scale") ? local::Po2Element::scale(rat(j["scale"])) : local::Po2Element::swap();
        auto r = local::po2_act(g, pair());
        return Value::Map{{"e12", list_of(r.pair.e12)},
                          {"e21", list_of(r.pair.e21)},
                          {"psi_before", r.psi_before},
                          {"psi_after", r.psi_after},
                          {"equivariant", r.equivariant}};
    }
    if (op == "normal_cone_quadric") {
        bool degenerate = j.value("degenerate", false);
        std::vector<std::pair<Rat, Rat>> ranks, vars;
        bool smooth = true;
        for (const Rat& p : sample_points()) {
            long nn = p.to_long();
            local::QuadricReport q;
            if (degenerate) {
                RatMatrix pairing(2 * nn - 2, 2 * nn - 2);
                pairing(0, 0) = Rat(1);
                q = local::normal_cone_quadric(nn, pairing);
            } else {
                q = local::normal_cone_quadric(nn);
            }
            ranks.emplace_back(p, Rat(static_cast<long>(q.rank)));
            vars.emplace_back(p, Rat(static_cast<long>(q.variables)));
            smooth = smooth && q.smooth;
        }
        return Value::Map{{"rank", interpolate(ranks)}, {"variables", interpolate(vars)}, {"smooth", smooth}};
    }
    if (op == "regular_sequence") {
        std::string family = need(j, "family", op).get<std::string>();
        int samples = j.value("samples", 8);
        std::vector<local::Quadric> qs;
        if (family == "phi_star_omega") {
            qs = local::phi_star_omega_family(local::SymplecticSpace::standard(need(j, "m", op).get<size_t>()));
        } else if (family == "pairing") {
            qs = {local::pairing_quadric(need(j, "n", op).get<long>())};
        } else if (family == "pairing_twice") {
            auto q = local::pairing_quadric(need(j, "n", op).get<long>());
            qs = {q, q};
        } else {
            throw ContractError("unknown quadric family '" + family + "'");
        }
        return local::regular_sequence_check(qs, samples);
    }
    if (op == "fixed_locus_incidence") {
        auto r = local::fixed_locus_incidence(need(j, "m", op).get<int>(), field());
        return Value::Map{{"points", Rat(r.points)},
                          {"incidence", Rat(r.incidence)},
                          {"fixed", Rat(r.fixed)},
                          {"diagonal", Rat(r.diagonal)},
                          {"fixed_equals_diagonal", r.fixed_equals_diagonal}};
    }
    if (op == "isotropy_enumeration")
        return sweep_value(local::isotropy_enumeration(need(j, "m", op).get<int>(), field()), true);
    if (op == "isotropy_samples")
        return sweep_value(local::isotropy_samples(need(j, "count", op).get<long>(), j.value("seed", 20240611UL)), true);
    if (op == "stabilizer_family_sweep") return sweep_value(local::stabilizer_family_sweep(), false);
    if (op == "sigma_family_sweep") return sweep_value(local::sigma_family_sweep(), false);
    throw ContractError("unknown check op '" + op + "'");
}

}  // namespace towerlab::scenario::detail

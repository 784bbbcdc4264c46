#include "towerlab/scenario/document.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "interpreter.hpp"

namespace towerlab::scenario {

using detail::Interp;

ParseError::ParseError(const std::string& origin, size_t line, size_t column, const std::string& what)
    : ScenarioError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

SemanticError::SemanticError(std::string object, const std::string& what)
    : ScenarioError("'" + object + "': " + what), object_(std::move(object)) {}

std::string to_string(NPolicy p) {
    switch (p) {
        case NPolicy::Symbolic: return "symbolic";
        case NPolicy::Fixed: return "fixed";
        default: return "any";
    }
}

namespace {

const std::set<std::string> kRequired = {"scenario", "spaces", "bundles", "maps", "curves", "expect"};
const std::set<std::string> kOptional = {"description", "n_policy", "divisors", "chains", "models",
                                         "preflight",   "notes",    "display"};
const char* kNamedSections[] = {"spaces", "bundles", "divisors", "maps", "curves", "chains", "models"};
const std::set<std::string> kProvenance = {"PAPER", "TRIVIAL", "DERIVED"};

std::string require_string(const json& j, const char* key, const std::string& object) {
    if (!j.is_object() || !j.contains(key)) throw SemanticError(object, std::string("missing '") + key + "'");
    if (!j[key].is_string()) throw SemanticError(object, std::string("'") + key + "' must be a string");
    return j[key].get<std::string>();
}

void validate_checks(const json& list, const std::string& section, bool full) {
    if (!list.is_array()) throw SemanticError(section, "must be a list");
    std::set<std::string> names;
    for (const auto& e : list) {
        std::string name = require_string(e, "check", section);
        if (!names.insert(name).second) throw SemanticError(name, "duplicate check name");
        if (!e.contains("compute") || !e["compute"].is_object())
            throw SemanticError(name, "missing 'compute' object");
        if (!e.contains("value")) throw SemanticError(name, "missing expected 'value'");
        if (!full) continue;
        if (!e.contains("provenance")) throw SemanticError(name, "untagged expected value: missing 'provenance'");
        std::string p = require_string(e, "provenance", name);
        if (!kProvenance.count(p)) throw SemanticError(name, "provenance must be PAPER, TRIVIAL or DERIVED, got '" + p + "'");
        require_string(e, "anchor", name);
    }
}

std::optional<Rat> n_value(NChoice n) {
    if (n.value) return Rat(*n.value);
    return std::nullopt;
}

// Builds an interpreter ready for read-only use, turning stray failures into
// semantic errors so callers see a single error family.
Interp prepared(const Scenario& s, std::optional<Rat> n) {
    Interp in(s.document, n);
    try {
        in.preflight();
        in.build_all();
    } catch (const ScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        throw SemanticError(s.name, e.what());
    }
    return in;
}

void check_policy(const Scenario& s, NChoice n) {
    if (n.value && *n.value < 3) throw InvalidN("n must be at least 3, got " + std::to_string(*n.value));
    if (s.policy == NPolicy::Symbolic && n.value)
        throw PolicyMismatch("scenario '" + s.name + "' is symbolic only; integer n is not accepted");
    if (s.policy == NPolicy::Fixed && !n.value)
        throw PolicyMismatch("scenario '" + s.name + "' needs an integer n");
}

}  // namespace

Scenario scenario_from_json(const json& doc, const std::string& origin) {
    if (!doc.is_object()) throw SemanticError(origin, "a scenario document must be a JSON object");
    for (const auto& k : kRequired)
        if (!doc.contains(k)) throw SemanticError(origin, "missing top-level key '" + k + "'");
    for (auto& [k, v] : doc.items()) {
        (void)v;
        if (!kRequired.count(k) && !kOptional.count(k)) throw SemanticError(origin, "unknown top-level key '" + k + "'");
    }
    Scenario s;
    s.name = require_string(doc, "scenario", origin);
    s.description = doc.contains("description") ? require_string(doc, "description", origin) : "";
    if (doc.contains("n_policy")) {
        std::string p = require_string(doc, "n_policy", origin);
        if (p == "any") s.policy = NPolicy::Any;
        else if (p == "symbolic") s.policy = NPolicy::Symbolic;
        else if (p == "fixed") s.policy = NPolicy::Fixed;
        else throw SemanticError(origin, "n_policy must be any, symbolic or fixed");
    }
    std::set<std::string> ids;
    for (const char* section : kNamedSections) {
        if (!doc.contains(section)) continue;
        if (!doc[section].is_array()) throw SemanticError(section, "must be a list");
        for (const auto& e : doc[section]) {
            std::string id = require_string(e, "id", section);
            if (!ids.insert(id).second) throw SemanticError(id, "duplicate id");
        }
    }
    validate_checks(doc["expect"], "expect", true);
    if (doc.contains("preflight")) validate_checks(doc["preflight"], "preflight", false);
    if (doc.contains("display") && !doc["display"].is_object()) throw SemanticError("display", "must be an object");
    s.document = doc;
    return s;
}

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        size_t upto = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        size_t line = 1, col = 1;
        for (size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
        throw ParseError(origin, line, col, what);
    }
    return scenario_from_json(doc, origin);
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    Scenario s = parse_scenario_text(ss.str(), path);
    std::optional<Rat> n;
    if (s.policy == NPolicy::Fixed) n = Rat(3);
    Interp it(s.document, n);
    try {
        it.build_all();
    } catch (const ScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        throw SemanticError(s.name, e.what());
    }
    return s;
}

VerificationReport run(const Scenario& s, NChoice n) {
    check_policy(s, n);
    std::optional<Rat> nv = n_value(n);
    Interp in = prepared(s, nv);

    const json& expect = s.document["expect"];
    std::vector<CheckResult> results(expect.size());
    std::vector<std::string> errors(expect.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < expect.size(); ++i) {
        const json& e = expect[i];
        CheckResult& r = results[i];
        r.name = e["check"].get<std::string>();
        r.provenance = e["provenance"].get<std::string>();
        r.anchor = e["anchor"].get<std::string>();
        try {
            Value got = in.compute(e["compute"]);
            r.computed = encode(got, nv);
            auto want = decode_like(e["value"], got);
            r.expected = want ? encode(*want, nv) : e["value"];
            r.pass = want && r.expected == r.computed;
        } catch (const std::exception& ex) {
            errors[i] = ex.what();
        }
    }
    for (size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty()) throw SemanticError(results[i].name, errors[i]);

    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return VerificationReport{s.name, n.str(), std::move(results)};
}

std::optional<TableView> table_view(const Scenario& s, NChoice n) {
    const json& doc = s.document;
    if (!doc.contains("display") || !doc["display"].contains("table")) return std::nullopt;
    check_policy(s, n);
    std::optional<Rat> nv = n_value(n);
    Interp in = prepared(s, nv);
    const json& t = doc["display"]["table"];
    try {
        TableView v;
        std::vector<curves::CurveClass> cs;
        std::vector<tower::DivClass> ds;
        for (const auto& c : detail::need(t, "curves", "table")) {
            cs.push_back(in.curve(c));
            v.row_labels.push_back(in.label(c));
        }
        for (const auto& d : detail::need(t, "divisors", "table")) {
            ds.push_back(in.div(d));
            v.col_labels.push_back(in.label(d));
        }
        v.cells = encode(rows_of(curves::pairing_table(cs, ds)), nv);
        if (t.contains("kernel")) {
            const json& k = t["kernel"];
            Value got = in.compute(json{{"op", "restriction_kernel"}, {"map", k.at("map")}, {"curves", k.at("curves")}});
            auto names = in.map(k.at("map")).source->basis();
            auto& m = std::get<Value::Map>(got.data);
            for (const auto& g : std::get<Value::List>(m.at("kernel").data)) {
                RatVec coeffs;
                for (const auto& x : std::get<Value::List>(g.data)) coeffs.push_back(std::get<Rat>(x.data));
                v.kernel.push_back(detail::linear_form(coeffs, names));
            }
        }
        return v;
    } catch (const ScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        throw SemanticError("display.table", e.what());
    }
}

std::optional<ConeView> cone_view(const Scenario& s, NChoice n) {
    const json& doc = s.document;
    if (!doc.contains("display") || !doc["display"].contains("cone")) return std::nullopt;
    check_policy(s, n);
    std::optional<Rat> nv = n_value(n);
    Interp in = prepared(s, nv);
    const json& c = doc["display"]["cone"];
    try {
        ConeView v;
        json refs = json::array();
        std::vector<curves::CurveClass> cs;
        if (c.contains("chain")) {
            const auto& ch = in.chain(c["chain"]);
            cs = ch.spec.steps.empty() ? ch.spec.base_cone : ch.spec.steps.back().curves;
            v.generators = ch.final_labels;
            if (ch.spec.steps.empty())
                for (const auto& b : doc["chains"]) {
                    if (b["id"] == c["chain"])
                        for (const auto& r : b["base_cone"]) v.generators.push_back(in.label(r));
                }
            Value got = in.compute(json{{"op", "mori_chain"}, {"chain", c["chain"]}});
            auto& m = std::get<Value::Map>(got.data);
            if (!std::get<bool>(m.at("hypotheses_hold").data))
                throw SemanticError(c["chain"].get<std::string>(), std::get<std::string>(m.at("failure").data));
        } else {
            for (const auto& r : detail::need(c, "curves", "cone")) {
                cs.push_back(in.curve(r));
                v.generators.push_back(in.label(r));
            }
        }
        if (cs.empty()) throw ContractError("empty cone");
        v.space = cs.front().space->id();
        Value::List vecs;
        for (const auto& x : cs) vecs.push_back(list_of(x.vec));
        v.vectors = encode(Value(vecs), nv);
        if (c.contains("face")) {
            std::vector<size_t> face;
            for (const auto& f : c["face"]) {
                auto it = std::find(v.generators.begin(), v.generators.end(), in.label(f));
                if (it == v.generators.end()) throw ContractError("face member " + f.dump() + " is not a generator");
                face.push_back(it - v.generators.begin());
            }
            std::optional<std::string> cert;
            for (const Rat& p : in.sample_points()) {
                std::vector<RatVec> gs;
                for (const auto& x : cs) gs.push_back(evaluate(x.vec, p));
                curves::Cone cone(cs.front().vec.size(), gs);
                auto found = curves::extremal_certificate(cone, face);
                std::string text = "inconclusive";
                if (found.status == curves::Certificate::Status::FOUND) {
                    RatVec f(found.functional.begin(), found.functional.end());
                    text = detail::linear_form(f, cs.front().space->basis());
                }
                if (cert && *cert != text) throw ContractError("certificate depends on n");
                cert = text;
            }
            v.certificate = cert;
        }
        return v;
    } catch (const ScenarioError&) {
        throw;
    } catch (const std::exception& e) {
        throw SemanticError("display.cone", e.what());
    }
}

}  // namespace towerlab::scenario

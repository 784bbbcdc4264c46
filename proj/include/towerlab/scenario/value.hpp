#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "towerlab/exact/matrix.hpp"
#include "towerlab/exact/param_poly.hpp"

namespace towerlab::scenario {

using json = nlohmann::json;

// Result of a check. Polynomials depend on n; rationals do not.
struct Value {
    using List = std::vector<Value>;
    using Map = std::map<std::string, Value>;
    std::variant<bool, std::string, Rat, ParamPoly, List, Map> data;

    Value() : data(false) {}
    Value(bool b) : data(b) {}
    Value(const char* s) : data(std::string(s)) {}
    Value(std::string s) : data(std::move(s)) {}
    Value(Rat r) : data(std::move(r)) {}
    Value(ParamPoly p) : data(std::move(p)) {}
    Value(List l) : data(std::move(l)) {}
    Value(Map m) : data(std::move(m)) {}
};

Value list_of(const PolyVec& v);
Value list_of(const RatVec& v);
Value rows_of(const PolyMatrix& m);

// Polynomials encode as coefficient maps {"0":"c0",...} when n is symbolic,
// and as their value at n otherwise. Rationals are strings "p" or "p/q".
json encode(const Value& v, const std::optional<Rat>& n);

// Reads an expected value from a document using the computed value as the
// shape template. Returns nothing when the shapes do not fit.
std::optional<Value> decode_like(const json& j, const Value& shape);

}  // namespace towerlab::scenario

#include "towerlab/scenario/value.hpp"

namespace towerlab::scenario {

namespace {

std::optional<Rat> read_rat(const json& j) {
    try {
        if (j.is_number_integer()) return Rat(j.get<long>());
        if (j.is_string()) return Rat::parse(j.get<std::string>());
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

std::optional<ParamPoly> read_poly(const json& j) {
    try {
        if (j.is_number_integer()) return ParamPoly(j.get<long>());
        if (j.is_string()) return ParamPoly::parse(j.get<std::string>());
        if (j.is_object()) {
            std::map<int, Rat> c;
            for (auto& [k, v] : j.items()) {
                auto r = read_rat(v);
                if (!r) return std::nullopt;
                c[std::stoi(k)] = *r;
            }
            return ParamPoly(c);
        }
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

}  // namespace

Value list_of(const PolyVec& v) {
    Value::List out(v.begin(), v.end());
    return out;
}

Value list_of(const RatVec& v) {
    Value::List out(v.begin(), v.end());
    return out;
}

Value rows_of(const PolyMatrix& m) {
    Value::List rows;
    for (size_t i = 0; i < m.rows(); ++i) rows.push_back(list_of(m.row(i)));
    return rows;
}

json encode(const Value& v, const std::optional<Rat>& n) {
    return std::visit(
        [&](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool> || std::is_same_v<T, std::string>) {
                return x;
            } else if constexpr (std::is_same_v<T, Rat>) {
                return x.str();
            } else if constexpr (std::is_same_v<T, ParamPoly>) {
                if (n) return x.eval(*n).str();
                json o = json::object();
                for (const auto& [e, c] : x.coeffs()) o[std::to_string(e)] = c.str();
                return o;
            } else if constexpr (std::is_same_v<T, Value::List>) {
                json a = json::array();
                for (const auto& e : x) a.push_back(encode(e, n));
                return a;
            } else {
                json o = json::object();
                for (const auto& [k, e] : x) o[k] = encode(e, n);
                return o;
            }
        },
        v.data);
}

std::optional<Value> decode_like(const json& j, const Value& shape) {
    return std::visit(
        [&](const auto& x) -> std::optional<Value> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>) {
                if (j.is_boolean()) return Value(j.get<bool>());
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (j.is_string()) return Value(j.get<std::string>());
            } else if constexpr (std::is_same_v<T, Rat>) {
                if (auto r = read_rat(j)) return Value(*r);
            } else if constexpr (std::is_same_v<T, ParamPoly>) {
                if (auto p = read_poly(j)) return Value(*p);
            } else if constexpr (std::is_same_v<T, Value::List>) {
                if (!j.is_array() || j.size() != x.size()) return std::nullopt;
                Value::List out;
                for (size_t i = 0; i < x.size(); ++i) {
                    auto e = decode_like(j[i], x[i]);
                    if (!e) return std::nullopt;
                    out.push_back(*e);
                }
                return Value(out);
            } else {
                if (!j.is_object() || j.size() != x.size()) return std::nullopt;
                Value::Map out;
                for (const auto& [k, e] : x) {
                    if (!j.contains(k)) return std::nullopt;
                    auto d = decode_like(j[k], e);
                    if (!d) return std::nullopt;
                    out[k] = *d;
                }
                return Value(out);
            }
            return std::nullopt;
        },
        shape.data);
}

}  // namespace towerlab::scenario

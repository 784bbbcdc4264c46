#include "towerlab/exact/param_poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "towerlab/exact/error.hpp"

namespace towerlab {

ParamPoly::ParamPoly(const Rat& c) {
    if (!c.is_zero()) c_[0] = c;
}

ParamPoly::ParamPoly(std::map<int, Rat> coeffs) : c_(std::move(coeffs)) {
    for (const auto& [e, v] : c_)
        if (e < 0) throw ContractError("negative exponent in polynomial");
    prune();
    if (degree() > kMaxDegree) throw DegreeOverflow("polynomial degree exceeds cap");
}

ParamPoly ParamPoly::monomial(const Rat& c, int exp) {
    std::map<int, Rat> m;
    m[exp] = c;
    return ParamPoly(std::move(m));
}

void ParamPoly::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero())
            it = c_.erase(it);
        else
            ++it;
    }
}

Rat ParamPoly::constant() const {
    if (!is_constant()) throw ContractError("polynomial " + str() + " is not constant");
    return coeff(0);
}

Rat ParamPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rat(0) : it->second;
}

Rat ParamPoly::eval(const Rat& at) const {
    Rat acc(0);
    for (int e = degree(); e >= 0; --e) acc = acc * at + coeff(e);
    return acc;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [e, v] : r.c_) v = -v;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, v] : o.c_) c_[e] += v;
    prune();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, v] : o.c_) c_[e] -= v;
    prune();
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    if (!is_zero() && !o.is_zero() && degree() + o.degree() > kMaxDegree)
        throw DegreeOverflow("product (" + str() + ")*(" + o.str() + ") exceeds degree cap");
    std::map<int, Rat> out;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) out[e1 + e2] += v1 * v2;
    c_ = std::move(out);
    prune();
    return *this;
}

std::string ParamPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        Rat mag = v.abs();
        if (first) {
            if (v.sign() < 0) os << "-";
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rat(1);
        if (e == 0 || !unit) os << mag.str();
        if (e >= 1) os << "n";
        if (e >= 2) os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

namespace {

struct TermParser {
    std::string s;
    size_t i = 0;

    [[noreturn]] void fail() const { throw ContractError("malformed polynomial: '" + s + "'"); }

    std::string digits() {
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(st, i - st);
    }

    ParamPoly parse() {
        if (s.empty()) fail();
        ParamPoly acc;
        while (i < s.size()) {
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            } else if (i != 0) {
                fail();
            }
            Rat c(1);
            std::string num = digits();
            if (!num.empty()) {
                c = Rat::parse(num);
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    std::string den = digits();
                    if (den.empty()) fail();
                    c = Rat::parse(num + "/" + den);
                }
                if (i < s.size() && s[i] == '*') ++i;
            }
            int exp = 0;
            if (i < s.size() && s[i] == 'n') {
                ++i;
                exp = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::string e = digits();
                    if (e.empty()) fail();
                    exp = std::stoi(e);
                }
            } else if (num.empty()) {
                fail();
            }
            acc += ParamPoly::monomial(sign < 0 ? -c : c, exp);
        }
        return acc;
    }
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text) {
    TermParser p;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) p.s.push_back(ch);
    return p.parse();
}

bool poly_identity_check(const ParamPoly& p, const ParamPoly& q, int degree_bound) {
    if (p.degree() > degree_bound || q.degree() > degree_bound)
        throw ContractError("degree bound " + std::to_string(degree_bound) + " exceeded");
    bool by_coeffs = p == q;
    bool by_eval = true;
    for (int k = 0; k <= degree_bound; ++k) {
        Rat at(3 + k);
        if (p.eval(at) != q.eval(at)) by_eval = false;
    }
    if (by_coeffs != by_eval) throw std::logic_error("identity check routes disagree");
    return by_coeffs;
}

ParamPoly interpolate(const std::vector<std::pair<Rat, Rat>>& samples) {
    ParamPoly result;
    for (size_t i = 0; i < samples.size(); ++i) {
        ParamPoly basis(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < samples.size(); ++j) {
            if (j == i) continue;
            if (samples[i].first == samples[j].first)
                throw ContractError("interpolation nodes must be distinct");
            basis *= ParamPoly::n() - ParamPoly(samples[j].first);
            denom *= samples[i].first - samples[j].first;
        }
        result += basis * ParamPoly(samples[i].second / denom);
    }
    return result;
}

}  // namespace towerlab

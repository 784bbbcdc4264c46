#include "towerlab/exact/rat.hpp"

#include <climits>
#include <ostream>

#include "towerlab/exact/error.hpp"

namespace towerlab {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

mpz_class parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!is_digits(s)) throw ContractError("malformed rational: '" + std::string(s) + "'");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

}  // namespace

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text), mpz_class(1));
    std::string_view den = text.substr(slash + 1);
    if (!is_digits(den)) throw ContractError("malformed rational: '" + std::string(text) + "'");
    return Rat(parse_int(text.substr(0, slash)), mpz_class(std::string(den), 10));
}

long Rat::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw ContractError("rational " + str() + " is not a machine integer");
    return q_.get_num().get_si();
}

Rat& Rat::operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rat(mpq_class(1 / q_));
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace towerlab

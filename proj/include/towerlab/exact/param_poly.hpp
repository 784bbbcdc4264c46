#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "towerlab/exact/rat.hpp"

namespace towerlab {

// Polynomial in the integer parameter n with rational coefficients.
class ParamPoly {
public:
    static constexpr int kMaxDegree = 4;

    ParamPoly() = default;
    ParamPoly(int c) : ParamPoly(Rat(c)) {}
    ParamPoly(long c) : ParamPoly(Rat(c)) {}
    ParamPoly(const Rat& c);
    explicit ParamPoly(std::map<int, Rat> coeffs);

    static ParamPoly n() { return monomial(Rat(1), 1); }
    static ParamPoly monomial(const Rat& c, int exp);
    // Accepts forms like "3", "-1/2", "2n-4", "1 - 2n", "n^2+3n".
    static ParamPoly parse(std::string_view text);

    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return degree() <= 0; }
    Rat constant() const;  // throws unless constant
    Rat coeff(int exp) const;
    const std::map<int, Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& at) const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }

    // Human form, e.g. "1 - 2n", "n^2 + 3".
    std::string str() const;

private:
    void prune();
    std::map<int, Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

// Exact identity test by coefficients, cross-validated by evaluation at
// degree_bound + 1 integers starting at 3.
bool poly_identity_check(const ParamPoly& p, const ParamPoly& q, int degree_bound);

// Unique polynomial of degree < samples.size() through the points.
ParamPoly interpolate(const std::vector<std::pair<Rat, Rat>>& samples);

}  // namespace towerlab

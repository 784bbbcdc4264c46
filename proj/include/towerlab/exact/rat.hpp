#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace towerlab {

// Arbitrary precision rational, always reduced with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(int v) : q_(static_cast<long>(v)) {}
    Rat(long v) : q_(v) {}
    Rat(long num, long den);
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& q);

    // Accepts "p", "-p", "p/q".
    static Rat parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    long to_long() const;  // throws unless integral and in range

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rat inverse() const;
    Rat abs() const { return Rat(mpq_class(::abs(q_))); }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace towerlab

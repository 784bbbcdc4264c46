#include "towerlab/exact/prime_field.hpp"

#include "towerlab/exact/error.hpp"

namespace towerlab {

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeFieldConfig::PrimeFieldConfig(int64_t modulus) : p(modulus) {
    if (!is_prime(modulus)) throw ContractError("modulus " + std::to_string(modulus) + " is not prime");
}

int64_t PrimeFieldConfig::inv(int64_t a) const {
    a = norm(a);
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // Fermat: a^(p-2).
    int64_t r = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::optional<int64_t> PrimeFieldConfig::reduce(const Rat& r) const {
    mpz_class pz(static_cast<long>(p));
    mpz_class num = r.num() % pz;
    mpz_class den = r.den() % pz;
    if (den == 0) return std::nullopt;
    return mul(num.get_si(), inv(den.get_si()));
}

size_t rank_mod_p(FpMatrix m, const PrimeFieldConfig& f) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && f.norm(m[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        int64_t inv = f.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            int64_t k = f.norm(m[i][c]);
            if (k == 0) continue;
            for (size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(k, m[r][j]));
        }
        ++r;
    }
    return r;
}

bool is_normalized(const std::vector<int64_t>& v) {
    for (int64_t x : v)
        if (x != 0) return x == 1;
    return false;
}

std::vector<std::vector<int64_t>> projective_points(int dim, const PrimeFieldConfig& f) {
    std::vector<std::vector<int64_t>> pts;
    std::vector<int64_t> v(dim, 0);
    int64_t total = 1;
    for (int i = 0; i < dim; ++i) total *= f.p;
    for (int64_t code = 0; code < total; ++code) {
        int64_t c = code;
        for (int i = dim - 1; i >= 0; --i) {
            v[i] = c % f.p;
            c /= f.p;
        }
        if (is_normalized(v)) pts.push_back(v);
    }
    return pts;
}

}  // namespace towerlab

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "towerlab/exact/rat.hpp"

namespace towerlab {

// Small prime field F_p; used by the enumeration oracles.
struct PrimeFieldConfig {
    int64_t p = 3;

    explicit PrimeFieldConfig(int64_t modulus = 3);

    int64_t norm(int64_t a) const { return ((a % p) + p) % p; }
    int64_t add(int64_t a, int64_t b) const { return norm(a + b); }
    int64_t sub(int64_t a, int64_t b) const { return norm(a - b); }
    int64_t mul(int64_t a, int64_t b) const { return norm(a * b); }
    int64_t inv(int64_t a) const;
    // Image of a rational; empty when the denominator vanishes mod p.
    std::optional<int64_t> reduce(const Rat& r) const;
};

bool is_prime(int64_t p);

using FpMatrix = std::vector<std::vector<int64_t>>;

size_t rank_mod_p(FpMatrix m, const PrimeFieldConfig& f);

// Canonical representative of a projective point: first nonzero entry is 1.
bool is_normalized(const std::vector<int64_t>& v);

// All normalized nonzero vectors of F_p^dim, in lexicographic order.
std::vector<std::vector<int64_t>> projective_points(int dim, const PrimeFieldConfig& f);

}  // namespace towerlab

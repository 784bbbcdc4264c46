#pragma once

// Independent reference computations for the test suites. None of these call
// into the library; they use plain integers, mpz, or brute force.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

// ---- rank by fraction-free Bareiss elimination ---------------------------------

inline size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    mpz_class prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// ---- SO(W) over F_p by brute force ---------------------------------------------

using M3 = std::array<std::array<int, 3>, 3>;

inline int mod(long a, int p) { return static_cast<int>(((a % p) + p) % p); }

// Every g with g^T G g = G and det g = 1 modulo p.
inline std::vector<M3> special_orthogonal(const M3& G, int p) {
    std::vector<M3> out;
    long total = 1;
    for (int i = 0; i < 9; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
        M3 g;
        long c = code;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                g[i][j] = static_cast<int>(c % p);
                c /= p;
            }
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = 0; j < 3 && ok; ++j) {
                long s = 0;
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) s += g[k][i] * G[k][l] * g[l][j];
                ok = mod(s, p) == mod(G[i][j], p);
            }
        if (!ok) continue;
        long det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                   g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
        if (mod(det, p) == 1) out.push_back(g);
    }
    return out;
}

// Number of g in the group with phi g = phi; phi has 3 columns, entries mod p.
inline long stabilizer_order(const std::vector<std::array<int, 3>>& phi, const std::vector<M3>& group, int p) {
    long count = 0;
    for (const auto& g : group) {
        bool fixed = true;
        for (size_t r = 0; r < phi.size() && fixed; ++r)
            for (int j = 0; j < 3 && fixed; ++j) {
                long s = 0;
                for (int k = 0; k < 3; ++k) s += phi[r][k] * g[k][j];
                fixed = mod(s, p) == mod(phi[r][j], p);
            }
        count += fixed;
    }
    return count;
}

// ---- Cech cohomology of O(d) on P^2 ----------------------------------------------

// Rank of an integer matrix given by rows.
inline size_t int_rank(const std::vector<std::vector<long>>& m) {
    std::vector<std::vector<mpz_class>> a;
    for (const auto& r : m) {
        std::vector<mpz_class> row;
        for (long x : r) row.push_back(x);
        a.push_back(row);
    }
    return bareiss_rank(a);
}

// h^q(P^2, O(d)) from the Cech complex of the standard affine cover, computed
// one Laurent monomial at a time: x^e is a section over U_sigma exactly when
// its negative exponents are indexed by elements of sigma.
inline long cech_p2(long d, int q) {
    std::vector<std::vector<int>> simplices[3];
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<int> s;
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1) s.push_back(i);
        simplices[s.size() - 1].push_back(s);
    }
    auto contains = [](const std::vector<int>& s, int i) {
        for (int x : s)
            if (x == i) return true;
        return false;
    };
    long bound = std::abs(d) + 3;
    long total = 0;
    for (long e0 = -bound; e0 <= bound; ++e0)
        for (long e1 = -bound; e1 <= bound; ++e1) {
            long e[3] = {e0, e1, d - e0 - e1};
            auto allowed = [&](const std::vector<int>& s) {
                for (int i = 0; i < 3; ++i)
                    if (e[i] < 0 && !contains(s, i)) return false;
                return true;
            };
            std::vector<std::vector<int>> cells[3];
            for (int k = 0; k < 3; ++k)
                for (const auto& s : simplices[k])
                    if (allowed(s)) cells[k].push_back(s);
            // coboundary C^k -> C^{k+1} with alternating signs
            auto delta = [&](int k) {
                std::vector<std::vector<long>> m(cells[k + 1].size(), std::vector<long>(cells[k].size(), 0));
                for (size_t r = 0; r < cells[k + 1].size(); ++r) {
                    const auto& big = cells[k + 1][r];
                    for (size_t pos = 0; pos < big.size(); ++pos) {
                        std::vector<int> face;
                        for (size_t t = 0; t < big.size(); ++t)
                            if (t != pos) face.push_back(big[t]);
                        for (size_t c = 0; c < cells[k].size(); ++c)
                            if (cells[k][c] == face) m[r][c] = pos % 2 ? -1 : 1;
                    }
                }
                return m;
            };
            long dims[3] = {static_cast<long>(cells[0].size()), static_cast<long>(cells[1].size()),
                            static_cast<long>(cells[2].size())};
            long r0 = dims[1] && dims[0] ? static_cast<long>(int_rank(delta(0))) : 0;
            long r1 = dims[2] && dims[1] ? static_cast<long>(int_rank(delta(1))) : 0;
            long h[3] = {dims[0] - r0, dims[1] - r1 - r0, dims[2] - r1};
            total += h[q];
        }
    return total;
}

// Kunneth on P^2 x P^2.
inline long cech_p2xp2(long a, long b, int q) {
    long s = 0;
    for (int i = 0; i <= 2; ++i) {
        int j = q - i;
        if (j < 0 || j > 2) continue;
        s += cech_p2(a, i) * cech_p2(b, j);
    }
    return s;
}

// ---- isotropic subspaces of the standard symplectic F_p^4 ----------------------

// Number of phi in Hom(F_p^3, F_p^4) whose image is isotropic, counted as
// sum over isotropic subspaces U of the surjections F_p^3 -> U.
inline long isotropic_hom_count_f3_m4() {
    const int p = 3;
    auto omega = [](const std::array<int, 4>& u, const std::array<int, 4>& v) {
        return mod(u[0] * v[2] + u[1] * v[3] - u[2] * v[0] - u[3] * v[1], 3);
    };
    std::vector<std::array<int, 4>> vecs;
    for (int c = 1; c < 81; ++c) vecs.push_back({c % 3, c / 3 % 3, c / 9 % 3, c / 27});
    long lines = vecs.size() / (p - 1);
    // isotropic planes: pairs of orthogonal independent vectors, divided by |GL_2(F_3)| = 48
    long pairs = 0;
    for (const auto& u : vecs)
        for (const auto& v : vecs) {
            if (omega(u, v)) continue;
            bool dependent = false;
            for (int k = 1; k < p; ++k) {
                bool same = true;
                for (int i = 0; i < 4; ++i) same = same && mod(k * u[i], p) == v[i];
                dependent = dependent || same;
            }
            pairs += !dependent;
        }
    long planes = pairs / 48;
    long onto_line = 27 - 1, onto_plane = (27 - 1) * (27 - 3);
    return 1 + lines * onto_line + planes * onto_plane;
}

}  // namespace oracle

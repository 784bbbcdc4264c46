#include "towerlab/exact/linalg.hpp"

#include <algorithm>

namespace towerlab {

RatMatrix evaluate(const PolyMatrix& m, const Rat& n) {
    RatMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(n);
    return out;
}

RatVec evaluate(const PolyVec& v, const Rat& n) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.eval(n));
    return out;
}

PolyMatrix lift(const RatMatrix& m) {
    PolyMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = ParamPoly(m(i, j));
    return out;
}

PolyVec lift(const RatVec& v) { return PolyVec(v.begin(), v.end()); }

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

ParamPoly dot(const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
    ParamPoly s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rref rref(RatMatrix m) {
    Rref out;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = m(r, c).inverse();
        for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rat f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
    Rref rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols(), Rat(0));
        v[f] = Rat(1);
        for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVec> span_basis(const std::vector<RatVec>& vectors, size_t dim) {
    RatMatrix m = RatMatrix::from_rows(vectors, dim);
    Rref rr = rref(m);
    std::vector<RatVec> out;
    for (size_t i = 0; i < rr.pivots.size(); ++i) out.push_back(rr.reduced.row(i));
    return out;
}

RatVec solve_linear(const RatMatrix& a, const RatVec& b) {
    if (a.rows() != b.size()) throw DimensionMismatch("right-hand side length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) throw NoSolution();
    if (rr.pivots.size() < a.cols()) throw Underdetermined(kernel_basis(a));
    RatVec x(a.cols(), Rat(0));
    for (size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.reduced(i, a.cols());
    if (a * x != b) throw std::logic_error("solve_linear re-substitution failed");
    return x;
}

RatMatrix inverse(const RatMatrix& a) {
    if (!a.square()) throw DimensionMismatch("inverse of non-square matrix");
    size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Rat(1);
    }
    Rref rr = rref(aug);
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1)
        throw ContractError("matrix is singular");
    RatMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

bool matrix_product_is_identity(const RatMatrix& a, const RatMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw DimensionMismatch("identity test needs square matrices of equal size");
    return a * b == RatMatrix::identity(a.rows());
}

bool matrix_product_is_identity(const PolyMatrix& a, const PolyMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw DimensionMismatch("identity test needs square matrices of equal size");
    return a * b == PolyMatrix::identity(a.rows());
}

int max_degree(const PolyMatrix& m) {
    int d = -1;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
    return d;
}

int max_degree(const PolyVec& v) {
    int d = -1;
    for (const auto& p : v) d = std::max(d, p.degree());
    return d;
}

namespace {

int sample_count(int input_degree) {
    return input_degree <= 0 ? 1 : ParamPoly::kMaxDegree + 1;
}

}  // namespace

PolyVec solve_generic(const PolyMatrix& a, const PolyVec& b) {
    int samples = sample_count(std::max(max_degree(a), max_degree(b)));
    std::vector<std::vector<std::pair<Rat, Rat>>> per_coord(a.cols());
    for (int k = 0; k < samples; ++k) {
        Rat at(3 + k);
        RatVec x = solve_linear(evaluate(a, at), evaluate(b, at));
        for (size_t j = 0; j < x.size(); ++j) per_coord[j].emplace_back(at, x[j]);
    }
    PolyVec x;
    for (const auto& pts : per_coord) x.push_back(interpolate(pts));
    // a rational-function solution shows up as a degree overflow or a mismatch
    try {
        if (a * x != b) throw NoSolution();
    } catch (const DegreeOverflow&) {
        throw NoSolution();
    }
    return x;
}

PolyMatrix inverse_generic(const PolyMatrix& a) {
    if (!a.square()) throw DimensionMismatch("inverse of non-square matrix");
    size_t n = a.rows();
    std::vector<PolyVec> cols;
    for (size_t j = 0; j < n; ++j) {
        PolyVec e(n, ParamPoly());
        e[j] = ParamPoly(1);
        try {
            cols.push_back(solve_generic(a, e));
        } catch (const Error&) {
            throw ContractError("matrix is not invertible over Q[n]");
        }
    }
    return PolyMatrix::from_columns(cols, n);
}

}  // namespace towerlab

#pragma once

#include <vector>

#include "towerlab/exact/error.hpp"
#include "towerlab/exact/matrix.hpp"

namespace towerlab {

class Underdetermined : public Error {
public:
    explicit Underdetermined(std::vector<RatVec> kernel)
        : Error("underdetermined"), kernel_(std::move(kernel)) {}
    const std::vector<RatVec>& kernel() const { return kernel_; }

private:
    std::vector<RatVec> kernel_;
};

struct Rref {
    RatMatrix reduced;
    std::vector<size_t> pivots;  // pivot column of each nonzero row
};

Rref rref(RatMatrix m);
size_t rank(const RatMatrix& m);

// Basis of {x : m x = 0}; one vector per free column, free entry 1.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

// Canonical (reduced row echelon) basis of the span of the vectors.
std::vector<RatVec> span_basis(const std::vector<RatVec>& vectors, size_t dim);

// Exact solution of A x = b; re-substitution is checked on every call.
RatVec solve_linear(const RatMatrix& a, const RatVec& b);

RatMatrix inverse(const RatMatrix& a);

bool matrix_product_is_identity(const RatMatrix& a, const RatMatrix& b);
bool matrix_product_is_identity(const PolyMatrix& a, const PolyMatrix& b);

// Generic-in-n solve: solve at sample values n = 3, 4, ..., interpolate each
// coordinate, then confirm A x = b as a polynomial identity.
PolyVec solve_generic(const PolyMatrix& a, const PolyVec& b);
PolyMatrix inverse_generic(const PolyMatrix& a);

// Highest degree among entries; -1 for an all-zero input.
int max_degree(const PolyMatrix& m);
int max_degree(const PolyVec& v);

}  // namespace towerlab

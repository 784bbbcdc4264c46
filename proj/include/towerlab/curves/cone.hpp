#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerlab/curves/curve.hpp"

namespace towerlab::curves {

struct Cone {
    size_t dim = 0;
    std::vector<RatVec> generators;

    Cone(size_t d, std::vector<RatVec> gens);
};

struct Certificate {
    enum class Status { FOUND, INCONCLUSIVE } status = Status::INCONCLUSIVE;
    std::vector<long> functional;   // integral, in the divisor lattice
    RatVec values;                  // functional paired with each generator
    long height = 0;
    std::optional<RatVec> witness;  // sum w_i g_i = 0 with w >= 0 off the face
};

constexpr long kDefaultHeightBound = 8;

// Lexicographically smallest functional of minimal height that vanishes on
// the face and is positive on the other generators. Shells are scanned in
// parallel; the serial version is the reference.
Certificate extremal_certificate(const Cone& cone, const std::vector<size_t>& face, long bound = kDefaultHeightBound);
Certificate extremal_certificate_serial(const Cone& cone, const std::vector<size_t>& face,
                                        long bound = kDefaultHeightBound);

// Re-evaluate a functional against every generator.
bool certificate_sound(const Cone& cone, const std::vector<size_t>& face, const std::vector<long>& functional);

// Kernel of a restriction map, and the curves (in the given basis) pairing to zero with it.
struct KernelReport {
    std::vector<RatVec> kernel;  // divisor vectors, canonical echelon basis
    std::vector<RatVec> perp;    // coefficient vectors over the curve basis, canonical echelon basis
};

KernelReport restriction_kernel(const PullbackMap& restriction, const std::vector<CurveClass>& curve_basis,
                                const Rat& n);

}  // namespace towerlab::curves

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "towerlab/exact/linalg.hpp"
#include "towerlab/exact/matrix.hpp"

namespace towerlab::local {

class DegenerateModel : public ContractError {
public:
    using ContractError::ContractError;
};

class NotInHomOmega : public ContractError {
public:
    NotInHomOmega() : ContractError("not in Hom^omega: image is not isotropic") {}
};

struct SymplecticSpace {
    RatMatrix gram;

    explicit SymplecticSpace(RatMatrix g);
    // Basis x_1..x_m, y_1..y_m with omega(x_i, y_i) = 1.
    static SymplecticSpace standard(size_t m);

    size_t dim() const { return gram.rows(); }
    Rat omega(const RatVec& u, const RatVec& v) const;
};

struct QuadSpaceW {
    RatMatrix gram;

    explicit QuadSpaceW(RatMatrix g);
    static QuadSpaceW hyperbolic();

    Rat kappa(const RatVec& u, const RatVec& v) const;
};

// Columns are the images of the three basis vectors of W.
struct HomWE {
    RatMatrix matrix;

    explicit HomWE(RatMatrix m);
    RatVec image(size_t i) const { return matrix.col(i); }
};

struct ExtPair {
    RatVec e12;
    RatVec e21;
    RatMatrix pairing;

    ExtPair(RatVec a, RatVec b);
    ExtPair(RatVec a, RatVec b, RatMatrix p);
};

enum class StabilizerClass { FULL_SO_W, ADDITIVE, MULTIPLICATIVE, TRIVIAL };

std::string to_string(StabilizerClass c);
StabilizerClass stabilizer_from_string(const std::string& s);

bool is_isotropic(const std::vector<RatVec>& generators, const SymplecticSpace& e);

StabilizerClass stabilizer_class_omega(const HomWE& phi, const QuadSpaceW& w, const SymplecticSpace& e);
StabilizerClass stabilizer_class_sigma(const ExtPair& pair);

// (phi^* omega)(w_i, w_j) for (i, j) = (1,2), (1,3), (2,3).
RatVec yoneda_omega(const HomWE& phi, const SymplecticSpace& e);

struct SigmaValue {
    Rat alpha;
    Rat beta;
    bool in_zero_locus;
};

// Psi(x) = <e12, e21> through the pairing.
Rat psi(const ExtPair& pair);
SigmaValue yoneda_sigma(const ExtPair& pair);

struct Po2Element {
    enum class Kind { Scale, Swap } kind;
    Rat lambda;

    static Po2Element scale(const Rat& l) { return {Kind::Scale, l}; }
    static Po2Element swap() { return {Kind::Swap, Rat(1)}; }
};

struct Po2Result {
    ExtPair pair;
    Rat psi_before;
    Rat psi_after;
    bool equivariant;
};

// Scaling preserves Psi; the swap carries the pairing -P^T, so Psi changes sign.
Po2Result po2_act(const Po2Element& g, const ExtPair& pair);

struct QuadricReport {
    RatMatrix gram;
    size_t variables;
    size_t rank;
    bool smooth;
};

// Rank of a symmetric matrix by congruence diagonalization.
size_t symmetric_rank(RatMatrix s);

// q(e12, e21) = <e12, e21> on Q^(4n-4). Default pairing is the identity.
QuadricReport normal_cone_quadric(long n);
QuadricReport normal_cone_quadric(long n, const RatMatrix& pairing);

// Homogeneous or not: x^T quad x + linear . x + constant.
struct Quadric {
    RatMatrix quad;
    RatVec linear;
    Rat constant;

    explicit Quadric(RatMatrix q);
    Quadric(RatMatrix q, RatVec l, Rat c);
};

// Full Jacobian rank at some seeded sampled point.
bool regular_sequence_check(const std::vector<Quadric>& quadrics, int samples, uint64_t seed = 20240611);

// The three components of phi^* omega as quadrics in the 3*dim entries of phi.
std::vector<Quadric> phi_star_omega_family(const SymplecticSpace& e);
Quadric pairing_quadric(long n);

}  // namespace towerlab::local

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "towerlab/exact/prime_field.hpp"
#include "towerlab/local/symplectic.hpp"

// Enumeration and sampling kernels. Each has an OpenMP version and a serial
// reference; both return identical reports.
namespace towerlab::local {

struct FixedLocusReport {
    long points = 0;     // |P^{m-1}(F_p)|
    long incidence = 0;  // pairs with omega_L(v, w) = 0
    long fixed = 0;      // incidence pairs fixed by the swap
    long diagonal = 0;   // diagonal pairs inside the incidence
    bool fixed_equals_diagonal = false;

    friend bool operator==(const FixedLocusReport&, const FixedLocusReport&) = default;
};

FixedLocusReport fixed_locus_incidence(int m, const PrimeFieldConfig& cfg);
FixedLocusReport fixed_locus_incidence_serial(int m, const PrimeFieldConfig& cfg);

struct SweepReport {
    long count = 0;
    long agree = 0;
    long positives = 0;  // isotropic members, or members in the zero locus

    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

// Over all phi in Hom(F_p^3, F_p^m): Upsilon(phi) = 0 iff im(phi) isotropic.
SweepReport isotropy_enumeration(int m, const PrimeFieldConfig& cfg);
SweepReport isotropy_enumeration_serial(int m, const PrimeFieldConfig& cfg);

// Same equivalence over Q on seeded samples in Hom(W, Q^6).
SweepReport isotropy_samples(long count, uint64_t seed);
SweepReport isotropy_samples_serial(long count, uint64_t seed);
HomWE isotropy_sample(long index, uint64_t seed);

struct FamilyMember {
    HomWE phi;
    StabilizerClass expected;  // from the stabilizer table applied to the construction data
    std::string label;
};

struct PairMember {
    ExtPair pair;
    StabilizerClass expected;
};

// Rank-stratified homomorphisms W -> Q^6 with images in Lagrangian planes.
std::vector<FamilyMember> stabilizer_family();
std::vector<PairMember> sigma_family();

SweepReport stabilizer_family_sweep();
SweepReport sigma_family_sweep();

}  // namespace towerlab::local

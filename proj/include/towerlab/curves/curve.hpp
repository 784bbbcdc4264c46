#pragma once

#include <string>
#include <variant>
#include <vector>

#include "towerlab/tower/calculus.hpp"

namespace towerlab::curves {

using tower::DivClass;
using tower::PullbackMap;
using tower::SpacePtr;

// A 1-cycle known by its intersection numbers with the Picard basis.
struct CurveClass {
    SpacePtr space;
    PolyVec vec;
    std::string provenance;

    CurveClass(SpacePtr s, PolyVec v, std::string prov = "");
};

// A line in a fiber of the projective bundle whose tautological generator is `gen`.
struct LineInProjFiber {
    SpacePtr space;
    std::string gen;
};

// A line in the exceptional divisor of a blow-up, running along the
// projective-bundle direction `direction` of the exceptional space.
struct LineInExceptionalFiber {
    SpacePtr blowup;
    std::string direction;
};

struct StrictTransform {
    SpacePtr blowup;
    CurveClass ambient;
    long mult_at_center = 1;
};

struct DeclaredSection {
    SpacePtr space;
    PolyVec vec;
    std::string note;
};

// Image of a curve on a subvariety S in a lattice space L, given the restriction L -> S.
struct PushedForward {
    CurveClass curve;
    PullbackMap restriction;
};

using AtomicCurveSpec = std::variant<LineInProjFiber, LineInExceptionalFiber, StrictTransform, DeclaredSection, PushedForward>;

CurveClass realize(const AtomicCurveSpec& spec);

ParamPoly intersect(const CurveClass& c, const DivClass& d);
ParamPoly intersect(const AtomicCurveSpec& c, const DivClass& d);

CurveClass combine(const std::vector<std::pair<ParamPoly, CurveClass>>& terms);

// Rows are curves, columns are divisors.
PolyMatrix pairing_table(const std::vector<CurveClass>& curves, const std::vector<DivClass>& divisors);

// Solve table^T y = observed, i.e. find the combination of the table's curves
// with the observed pairings.
PolyVec solve_pushforward(const PolyVec& observed, const PolyMatrix& table);

enum class Verdict { NEGATIVE, NOT_NEGATIVE, UNDECIDED };
std::string to_string(Verdict v);

// Sign of p(n) for every integer n >= 3.
Verdict negative_for_all_n(const ParamPoly& p);

struct KnegEntry {
    ParamPoly value;
    Verdict verdict;
};

std::vector<KnegEntry> kneg_check(const DivClass& k, const std::vector<CurveClass>& curves);

}  // namespace towerlab::curves

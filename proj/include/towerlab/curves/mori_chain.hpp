#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towerlab/curves/curve.hpp"

namespace towerlab::curves {

// A morphism out of a chain step, known through its pullback on Picard groups.
// Without a pullback the contracted curves must be declared by index.
struct Morphism {
    std::string name;
    std::optional<PullbackMap> pullback;  // source = target variety, target = the step's space
    std::vector<size_t> declared_contracted;
    std::string note;
};

struct ChainStep {
    SpacePtr space;
    std::vector<CurveClass> curves;  // Gamma_1 first
    Morphism c_prime;                // to the previous step's space
    Morphism c_double_prime;
};

struct ChainSpec {
    SpacePtr base_space;
    std::vector<CurveClass> base_cone;
    std::vector<ChainStep> steps;
};

struct ConditionLog {
    std::string condition;
    bool holds = false;
};

struct StepLog {
    std::string space;
    std::vector<ConditionLog> conditions;
};

struct ChainResult {
    std::vector<CurveClass> cone;
    std::vector<StepLog> steps;  // the base case is entry 0
};

class ChainHypothesisError : public ContractError {
public:
    ChainHypothesisError(size_t step, std::string space, std::string condition);
    size_t step() const { return step_; }
    const std::string& condition() const { return condition_; }

private:
    size_t step_;
    std::string condition_;
};

// Pushforward of a curve class along the morphism whose pullback is f.
PolyVec push_forward(const PullbackMap& f, const CurveClass& c);

// Runs every step, checking the hypotheses at n (or at n = 3..7 when absent,
// which is exact for the zero tests since entries have degree at most 4).
ChainResult mori_propagate(const ChainSpec& chain, std::optional<Rat> n = std::nullopt);

}  // namespace towerlab::curves

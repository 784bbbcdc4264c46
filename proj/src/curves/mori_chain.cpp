#include "towerlab/curves/mori_chain.hpp"

#include <algorithm>

#include "towerlab/exact/linalg.hpp"

namespace towerlab::curves {

namespace {

std::vector<Rat> sample_points(const std::optional<Rat>& n) {
    if (n) return {*n};
    return {Rat(3), Rat(4), Rat(5), Rat(6), Rat(7)};
}

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

bool forms_basis(const std::vector<CurveClass>& curves, size_t rank, const std::vector<Rat>& pts) {
    if (curves.size() != rank) return false;
    for (const auto& p : pts) {
        std::vector<RatVec> cols;
        for (const auto& c : curves) cols.push_back(evaluate(c.vec, p));
        if (towerlab::rank(RatMatrix::from_columns(cols, rank)) != rank) return false;
    }
    return true;
}

// Positive multiple of g at every sample point.
bool positive_multiple(const PolyVec& v, const PolyVec& g, const std::vector<Rat>& pts) {
    for (const auto& p : pts) {
        RatVec a = evaluate(v, p), b = evaluate(g, p);
        std::optional<Rat> ratio;
        for (size_t i = 0; i < a.size(); ++i) {
            if (b[i].is_zero()) {
                if (!a[i].is_zero()) return false;
                continue;
            }
            Rat r = a[i] / b[i];
            if (ratio && *ratio != r) return false;
            ratio = r;
        }
        if (!ratio || ratio->sign() <= 0) return false;
    }
    return true;
}

class StepChecker {
public:
    StepChecker(size_t index, const std::string& space, StepLog& log) : index_(index), space_(space), log_(log) {}

    void require(bool holds, const std::string& condition) {
        log_.conditions.push_back({condition, holds});
        if (!holds) throw ChainHypothesisError(index_, space_, condition);
    }

private:
    size_t index_;
    std::string space_;
    StepLog& log_;
};

// Contraction pattern of a morphism: entry i is true when the i-th curve is contracted.
std::vector<bool> contracted(const Morphism& m, const ChainStep& step, const std::vector<Rat>& pts,
                             StepChecker& check) {
    std::vector<bool> out(step.curves.size(), false);
    if (!m.pullback) {
        for (size_t i : m.declared_contracted) {
            check.require(i < step.curves.size(), m.name + " declares a curve index in range");
            out[i] = true;
        }
        return out;
    }
    check.require(m.pullback->target.get() == step.space.get(), m.name + " pulls back into the step's space");
    for (size_t i = 0; i < step.curves.size(); ++i) {
        PolyVec pushed = push_forward(*m.pullback, step.curves[i]);
        size_t zeros = 0;
        for (const auto& p : pts) zeros += is_zero(evaluate(pushed, p));
        check.require(zeros == 0 || zeros == pts.size(),
                      m.name + " contracts Γ" + std::to_string(i + 1) + " for every n or for none");
        out[i] = zeros == pts.size();
    }
    return out;
}

}  // namespace

ChainHypothesisError::ChainHypothesisError(size_t step, std::string space, std::string condition)
    : ContractError("chain step " + std::to_string(step) + " (" + space + "): " + condition + " fails"),
      step_(step),
      condition_(std::move(condition)) {}

PolyVec push_forward(const PullbackMap& f, const CurveClass& c) {
    if (c.space.get() != f.target.get())
        throw tower::SpaceMismatch("pushforward of a curve on '" + c.space->id() + "' along a map into '" +
                                   f.target->id() + "'");
    return f.matrix.transpose() * c.vec;
}

ChainResult mori_propagate(const ChainSpec& chain, std::optional<Rat> n) {
    if (!chain.base_space) throw ContractError("chain without a base space");
    auto pts = sample_points(n);
    ChainResult out;

    out.steps.push_back({chain.base_space->id(), {}});
    StepChecker base(0, chain.base_space->id(), out.steps.back());
    for (const auto& c : chain.base_cone)
        base.require(c.space.get() == chain.base_space.get(), "base cone lives on the base space");
    base.require(forms_basis(chain.base_cone, chain.base_space->picard_rank(), pts), "base cone is a basis");
    std::vector<CurveClass> cone = chain.base_cone;
    SpacePtr previous = chain.base_space;

    for (size_t k = 0; k < chain.steps.size(); ++k) {
        const ChainStep& step = chain.steps[k];
        out.steps.push_back({step.space->id(), {}});
        StepChecker check(k + 1, step.space->id(), out.steps.back());
        const size_t m = step.curves.size();

        for (const auto& c : step.curves) check.require(c.space.get() == step.space.get(), "curves live on the step");
        check.require(forms_basis(step.curves, step.space->picard_rank(), pts), "curves form a basis");

        check.require(step.c_prime.pullback.has_value(), "c' is given by a pullback");
        check.require(step.c_prime.pullback->source.get() == previous.get(), "c' maps to the previous space");
        auto cp = contracted(step.c_prime, step, pts, check);
        check.require(cp[0], "c' contracts Γ1");
        for (size_t i = 1; i < m; ++i) check.require(!cp[i], "c' does not contract Γ" + std::to_string(i + 1));

        auto cpp = contracted(step.c_double_prime, step, pts, check);
        for (size_t i = 1; i < m; ++i) check.require(cpp[i], "c'' contracts Γ" + std::to_string(i + 1));
        check.require(!cpp[0], "c'' does not contract Γ1");

        // c'_* carries Gamma_2..Gamma_m bijectively onto rays of the previous cone.
        check.require(m - 1 == cone.size(), "c' images match the previous cone in number");
        std::vector<bool> used(cone.size(), false);
        for (size_t i = 1; i < m; ++i) {
            PolyVec image = push_forward(*step.c_prime.pullback, step.curves[i]);
            bool matched = false;
            for (size_t j = 0; j < cone.size() && !matched; ++j) {
                if (used[j] || !positive_multiple(image, cone[j].vec, pts)) continue;
                used[j] = matched = true;
            }
            check.require(matched, "c'(Γ" + std::to_string(i + 1) + ") spans a ray of the previous cone");
        }
        cone = step.curves;
        previous = step.space;
    }
    out.cone = cone;
    return out;
}

}  // namespace towerlab::curves

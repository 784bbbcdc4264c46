#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "towerlab/exact/matrix.hpp"

namespace towerlab::tower {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

class SpaceMismatch : public ContractError {
public:
    using ContractError::ContractError;
};

// Divisor class as coordinates over a space's Picard basis.
struct DivClass {
    SpacePtr space;
    PolyVec coords;

    DivClass(SpacePtr s, PolyVec c);

    DivClass operator-() const;
    DivClass& operator+=(const DivClass& o);
    DivClass& operator-=(const DivClass& o);
    friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
    friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
    friend DivClass operator*(const ParamPoly& k, const DivClass& d);
    friend bool operator==(const DivClass& a, const DivClass& b);
};

// A bundle known only by rank and first Chern class.
struct FormalBundle {
    SpacePtr space;
    ParamPoly rank;
    DivClass c1;

    FormalBundle(ParamPoly r, DivClass c);
};

// Pullback on Picard groups. Columns are images of source generators in the target basis.
struct PullbackMap {
    SpacePtr source;
    SpacePtr target;
    PolyMatrix matrix;
    bool identification = false;

    PullbackMap(SpacePtr src, SpacePtr tgt, PolyMatrix m, bool ident = false);
};

struct ExceptionalData {
    SpacePtr space;             // the exceptional divisor as a tower of its own
    PullbackMap restriction;    // ambient -> exceptional space, through the center
    PolyVec self_class;         // class of O(E)|_E on the exceptional space
};

struct CenterSpec {
    ParamPoly codim;
    std::optional<ExceptionalData> exceptional;
};

struct FormalBaseKind {
    std::optional<PolyVec> canonical;
};

struct ProjBundleKind {
    SpacePtr base;
    FormalBundle bundle;
};

struct BlowUpKind {
    SpacePtr ambient;
    CenterSpec center;
    int exc_sign;  // the generator is exc_sign * [E]
};

struct FiberProductKind {
    SpacePtr left;
    SpacePtr right;
    SpacePtr over;
    std::vector<size_t> left_slots;   // slot in the product basis of each left generator
    std::vector<size_t> right_slots;  // same for the right factor
};

struct DivisorInKind {
    SpacePtr ambient;
    PolyVec divisor;
};

using SpaceKind = std::variant<FormalBaseKind, ProjBundleKind, BlowUpKind, FiberProductKind, DivisorInKind>;

class Space {
public:
    static SpacePtr formal_base(std::string id, std::vector<std::string> pic_names, ParamPoly dim,
                                std::optional<PolyVec> canonical = std::nullopt);
    static SpacePtr proj_bundle(std::string id, FormalBundle bundle, std::string taut_gen);
    static SpacePtr blow_up(std::string id, SpacePtr ambient, CenterSpec center, std::string exc_gen,
                            int exc_sign = 1);
    static SpacePtr fiber_product(std::string id, SpacePtr left, SpacePtr right, SpacePtr over);
    static SpacePtr divisor_in(std::string id, const DivClass& divisor);

    const std::string& id() const { return id_; }
    const SpaceKind& kind() const { return kind_; }
    const std::vector<std::string>& basis() const { return basis_; }
    size_t picard_rank() const { return basis_.size(); }
    const ParamPoly& dim() const { return dim_; }
    std::string kind_name() const;

    size_t index_of(const std::string& gen) const;  // throws when absent
    bool has_gen(const std::string& gen) const;

    // Construction generators added by this node (not inherited).
    std::vector<std::string> own_generators() const;
    // Immediate parents with the embedding of their Picard basis into this one.
    std::vector<std::pair<SpacePtr, PolyMatrix>> parents() const;

private:
    Space(std::string id, SpaceKind kind, std::vector<std::string> basis, ParamPoly dim);

    std::string id_;
    SpaceKind kind_;
    std::vector<std::string> basis_;
    ParamPoly dim_;
    size_t own_from_ = 0;
};

DivClass zero_class(const SpacePtr& s);
DivClass gen(const SpacePtr& s, const std::string& name);

// Sample values of n used for sign checks on ranks and codimensions.
bool positive_at_samples(const ParamPoly& p);

}  // namespace towerlab::tower

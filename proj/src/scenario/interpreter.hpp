#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "towerlab/curves/cone.hpp"
#include "towerlab/curves/mori_chain.hpp"
#include "towerlab/local/symplectic.hpp"
#include "towerlab/scenario/document.hpp"
#include "towerlab/scenario/value.hpp"

namespace towerlab::scenario::detail {

using tower::DivClass;
using tower::FormalBundle;
using tower::PullbackMap;
using tower::SpacePtr;
using curves::CurveClass;

using Model = std::variant<local::SymplecticSpace, local::QuadSpaceW, local::HomWE, local::ExtPair, RatMatrix>;

struct NamedChain {
    curves::ChainSpec spec;
    std::vector<std::string> final_labels;
};

// Builds the objects of one document at one choice of n. Named objects are
// built on first use and cached; after build_all() every lookup is read-only.
class Interp {
public:
    Interp(const json& doc, std::optional<Rat> n);

    void preflight();
    void build_all();
    Value compute(const json& op) const;

    SpacePtr space(const json& ref) const;
    FormalBundle bundle(const json& ref) const;
    DivClass div(const json& ref) const;
    PullbackMap map(const json& ref) const;
    CurveClass curve(const json& ref) const;
    const NamedChain& chain(const json& ref) const;
    const Model& model(const json& ref) const;

    ParamPoly poly(const json& j) const;
    Rat rat(const json& j) const;
    RatMatrix rat_matrix(const json& rows) const;
    const std::optional<Rat>& n() const { return n_; }

    std::string label(const json& ref) const;
    std::vector<Rat> sample_points() const;

private:
    struct Entry {
        std::string section;
        const json* body;
    };
    const Entry& entry(const std::string& id, const char* section) const;

    template <typename T, typename Build>
    const T& named(std::map<std::string, T>& cache, const std::string& id, const char* section, Build build) const;

    SpacePtr build_space(const std::string& id, const json& e) const;
    FormalBundle build_bundle(const json& e) const;
    DivClass build_div(const json& e) const;
    PullbackMap build_map(const json& e) const;
    CurveClass build_curve(const json& e) const;
    NamedChain build_chain(const json& e) const;
    Model build_model(const json& e) const;

    Value compute_local(const std::string& op, const json& j) const;
    Value compute_tower(const std::string& op, const json& j) const;

    const json& doc_;
    std::optional<Rat> n_;
    std::map<std::string, Entry> index_;
    mutable std::set<std::string> building_;
    mutable std::map<std::string, SpacePtr> spaces_;
    mutable std::map<std::string, FormalBundle> bundles_;
    mutable std::map<std::string, DivClass> divs_;
    mutable std::map<std::string, PullbackMap> maps_;
    mutable std::map<std::string, CurveClass> curves_;
    mutable std::map<std::string, NamedChain> chains_;
    mutable std::map<std::string, Model> models_;
};

const json& need(const json& j, const char* key, const std::string& where);
std::string linear_form(const RatVec& coeffs, const std::vector<std::string>& names);

}  // namespace towerlab::scenario::detail

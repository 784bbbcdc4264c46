#pragma once

#include <set>
#include <string>
#include <vector>

#include "towerlab/tower/space.hpp"

namespace towerlab::tower {

class MissingCanonical : public ContractError {
public:
    using ContractError::ContractError;
};

// ---- pullbacks -------------------------------------------------------------

// Pullback from an ancestor in the construction DAG (projections, inclusions).
PullbackMap tower_pullback(const SpacePtr& ancestor, const SpacePtr& s);
bool is_ancestor(const SpacePtr& ancestor, const SpacePtr& s);

PullbackMap identity_map(const SpacePtr& s);
PullbackMap map_from_columns(const SpacePtr& source, const SpacePtr& target, const std::vector<DivClass>& columns,
                             bool identification = false);

DivClass pullback(const PullbackMap& f, const DivClass& d);
// f: A -> B then g: B -> C gives A -> C.
PullbackMap compose(const PullbackMap& f, const PullbackMap& g);
PullbackMap inverse(const PullbackMap& f);

struct TransportStep {
    PullbackMap map;
    bool inverted = false;
};

// Push d through the steps, then project away the named generators and
// read the remaining coordinates on `onto`, whose basis must match.
DivClass transport_class(const DivClass& d, const std::vector<TransportStep>& via,
                         const std::set<std::string>& drop, const SpacePtr& onto);

// ---- bundles ---------------------------------------------------------------

FormalBundle trivial_bundle(const SpacePtr& s, const ParamPoly& rank);
FormalBundle line_bundle(const DivClass& c1);
// O(-1) inside pi^* F on P(F), c1 = -xi.
FormalBundle tautological_sub(const SpacePtr& pb);
FormalBundle dual(const FormalBundle& f);
FormalBundle tensor_line(const FormalBundle& f, const DivClass& line_c1);
FormalBundle tensor(const FormalBundle& a, const FormalBundle& b);
FormalBundle quotient(const FormalBundle& total, const FormalBundle& sub);
FormalBundle kernel(const FormalBundle& total, const FormalBundle& quot);
FormalBundle extension(const FormalBundle& sub, const FormalBundle& quot);
FormalBundle dsum(const FormalBundle& a, const FormalBundle& b);
FormalBundle sym2(const FormalBundle& f);
FormalBundle symk(const FormalBundle& f, long k);
FormalBundle wedge_top(const FormalBundle& f);
FormalBundle pull_bundle(const FormalBundle& f, const SpacePtr& descendant);
FormalBundle pull_bundle(const PullbackMap& f, const FormalBundle& b);

// Euler sequence 0 -> O -> pi^*F(1) -> T -> 0: rank r - 1, c1 = r xi + pi^* c1(F).
FormalBundle relative_tangent(const SpacePtr& pb);
DivClass relative_cotangent_class(const SpacePtr& pb);

// ---- canonical classes -----------------------------------------------------

DivClass canonical_class(const SpacePtr& s);
// K of an ambient restricted to s, from K_s = (K_ambient)|_s + c1(N).
DivClass ambient_canonical(const SpacePtr& s, const FormalBundle& normal);
// (K of a blown-up ambient)|_s for a blow-up s whose center has the given
// codimension in that ambient: pullback of the restricted class plus (codim - 1) E.
DivClass blowup_ambient_canonical(const SpacePtr& blowup, const DivClass& restricted_canonical,
                                  const ParamPoly& ambient_codim);

// ---- fiber products and blow-ups --------------------------------------------

// Restriction from X x_B X to its diagonal, identified with the left factor.
PullbackMap diagonal_restriction(const SpacePtr& fp);
// Class of the ideal of the diagonal: symmetric, restricting to the relative cotangent class.
DivClass diagonal_ideal(const SpacePtr& fp);
// Restriction from a blow-up to its exceptional divisor.
PullbackMap exceptional_restriction(const SpacePtr& blowup);

// P(F (x) M) = P(F): O_{P(F (x) M)}(1) = O_{P(F)}(1) - c1(M), and back.
DivClass twisted_tautological(const DivClass& taut, const DivClass& twist);
DivClass untwisted_tautological(const DivClass& taut, const DivClass& twist);

// ---- cohomology ------------------------------------------------------------

// h^q(P^2, O(d)).
long coh_dim_p2(long d, int q);
// h^q(P^2 x P^2, O(a, b)) via Kunneth.
long coh_dim_product_proj(long a, long b, int q);

// Dimension of the isotropic Grassmannian of k-planes in a symplectic space of dimension m.
ParamPoly isotropic_grassmannian_dim(long k, const ParamPoly& m);

}  // namespace towerlab::tower

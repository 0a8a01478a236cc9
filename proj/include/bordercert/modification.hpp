#pragma once

#include <map>
#include <memory>
#include <string>

#include "bordercert/borderbasis.hpp"

namespace bordercert {

// Border index j -> Upsilon(b_j); absent entries are zero targets.
using TargetMap = std::map<int, SpanElement<CoeffPoly>>;

// Targets on Seg(n, delta, r, (w)).
struct Step1Targets {
  TargetMap targets;
};

// Step 1 targets extended to S_D.
struct Step2Targets {
  TargetMap targets;
};

struct GenericModification {
  std::shared_ptr<const OrderIdealData> oid;
  RegistryPtr registry;
  TargetMap targets;
  BorderSystem<CoeffPoly> system;
};

// (x_alpha / x_beta) * f; throws InternalError if some term is not divisible.
SpanElement<CoeffPoly> transport(const SpanElement<CoeffPoly>& f, int alpha, int beta);

Step1Targets step1(const OrderIdealData& oid, const RegistryPtr& reg);
Step2Targets step2(const OrderIdealData& oid, const Step1Targets& tm);

// Y_ij <- Y_ij - upsilon_ij for every installed target.
BorderSystem<CoeffPoly> install_targets(BorderSystem<CoeffPoly> sys, const TargetMap& tm);

// sys_so_far must carry the S_D targets; its reductions rewrite them.
TargetMap step3(const OrderIdealData& oid, const Step2Targets& tm,
                const BorderSystem<CoeffPoly>& sys_so_far);

GenericModification build_generic_modification(std::shared_ptr<const OrderIdealData> oid);

// One "Upsilon(b[j]) = ..." line per target-bearing border monomial.
std::string dump_targets(const OrderIdealData& oid, const TargetMap& tm);

// The factor m' of the Step 2 factorization b = m' * b' of an S_D monomial.
Monomial step2_factor(const OrderIdealData& oid, const Monomial& b);

}  // namespace bordercert

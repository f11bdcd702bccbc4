#pragma once

#include "effects/comp.hpp"
#include "observations/observation.hpp"

namespace effver::vcgen {

// A side condition recorded while folding: a div/mod guard wrapped in its
// path condition and closed under the binders in scope at its occurrence.
struct SideCondition {
  logic::Formula formula;
  std::string origin;
};

struct WpResult {
  specm::SpecExpr spec;                // normalized
  std::vector<SideCondition> sides;
};

// The symbolic weakest precondition: a structural fold of the observation
// over the computation tree. ret goes through the target's ret, operations
// through their rules, conditionals split on the branch condition, pure lets
// substitute.
WpResult wp(const effects::Comp& m, const obs::Observation& o);

} // namespace effver::vcgen

#pragma once

#include "logic/domain.hpp"
#include "observations/observation.hpp"

namespace effver::obs {

struct MorphismReport {
  bool ok = true;
  std::string counterexample; // first failure, when any
  int ret_checked = 0;
  int bind_checked = 0;
};

// Checks the morphism equations extensionally over finite carriers:
//   wp(ret v)      =  ret_W v
//   wp(bind m f)   =  bind_W (wp m) (wp o f)
// for every operation/return tree up to `depth` (exhaustive over a small
// deterministic term pool), with all post tables enumerated over the queried
// points. Returns the first counterexample or a pass report.
MorphismReport check_morphism_laws(const Observation& o, const logic::DomainConfig& dom,
                                   int depth);

// Lifts an operation to the specification level at a given continuation
// spec, two ways:
//  - the direct route: the op rule applied at the continuation;
//  - the multiplication route: join of the wp of the tree that returns the
//    continuation spec as an opaque leaf.
// `cont` is indexed by the op's output variable name.
specm::SpecExpr lift_op_direct(const Observation& o, const std::string& op,
                               const logic::Term& input, const std::string& out_var,
                               const specm::SpecExpr& cont);
specm::SpecExpr lift_op_join(const Observation& o, const std::string& op,
                             const logic::Term& input, const std::string& out_var,
                             const specm::SpecExpr& cont);

} // namespace effver::obs

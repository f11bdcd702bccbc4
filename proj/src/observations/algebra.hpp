#pragma once

#include "effects/comp.hpp"
#include "logic/domain.hpp"
#include "observations/observation.hpp"

namespace effver::obs {

// An algebra interpreting operation nodes over proposition-valued leaves.
// Answer shapes: plain propositions (prop) or state-indexed propositions
// (S -> prop), the latter realized as formulas over a distinguished state
// term supplied at each application.
struct AlgebraRule {
  std::string name;
  effects::Signature sig;
  bool stateful = false;
  logic::Ty state = logic::Ty::unit();

  // prop shape: alpha_op(input, continuation at output term)
  using PropOp = std::function<logic::Formula(
      const logic::Term& input, const std::function<logic::Formula(const logic::Term&)>&)>;
  // S -> prop shape: alpha_op(input, continuation at (output, state), state)
  using StateOp = std::function<logic::Formula(
      const logic::Term& input,
      const std::function<logic::Formula(const logic::Term&, const logic::Term&)>&,
      const logic::Term& state)>;

  std::map<std::string, PropOp> prop_ops;
  std::map<std::string, StateOp> state_ops;
};

// Folds the algebra over a tree whose leaves are interpreted by `leaf`.
logic::Formula fold_algebra(const AlgebraRule& alg, const effects::Comp& m,
                            const std::function<logic::Formula(const logic::Term&)>& leaf);
logic::Formula fold_algebra_state(
    const AlgebraRule& alg, const effects::Comp& m,
    const std::function<logic::Formula(const logic::Term&, const logic::Term&)>& leaf,
    const logic::Term& state);

// Checks the algebra laws on randomized trees up to the given depth (unit
// law by construction; bind compatibility extensionally), then derives the
// observation op |-> fun p ctx -> alpha_op(i, fun o -> p o ctx). Throws
// AlgebraLawViolation with a witness description when a law fails.
Observation from_algebra(const AlgebraRule& alg, const logic::DomainConfig& dom,
                         int law_depth = 3);

// The conjunction / disjunction algebras over nondeterminism and the
// state-threading algebra, as named in the correspondence examples.
AlgebraRule alpha_forall();
AlgebraRule alpha_exists();
AlgebraRule alpha_state(const logic::Ty& s);

} // namespace effver::obs

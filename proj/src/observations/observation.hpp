#pragma once

#include <map>

#include "effects/signature.hpp"
#include "specmonads/spec_expr.hpp"

namespace effver::obs {

// An effect observation: for every operation of the signature, a symbolic
// spec of the bare generic effect (op applied with the identity
// continuation). The full rule for an operation with continuation is the
// target's bind of the bare spec, which makes the morphism equations hold by
// construction and keeps wp a structural fold.
struct Observation {
  std::string name;
  effects::Signature sig;
  specm::SpecMonadDescriptor target;
  // op name -> input term -> spec of gen_op(input)
  std::map<std::string, std::function<specm::SpecExpr(const logic::Term&)>> op_specs;

  // The op rule template: the spec of call(op, input, out_var, continuation)
  // given the continuation's spec.
  specm::SpecExpr rule(const std::string& op, const logic::Term& input,
                       const std::string& out_var, const specm::SpecExpr& cont) const;

  specm::SpecExpr bare(const std::string& op, const logic::Term& input) const;
};

} // namespace effver::obs

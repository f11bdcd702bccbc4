#include "observations/observation.hpp"

#include "logic/errors.hpp"

namespace effver::obs {

specm::SpecExpr Observation::bare(const std::string& op, const logic::Term& input) const {
  auto it = op_specs.find(op);
  if (it == op_specs.end())
    throw UnhandledOp("observation " + name + " has no rule for " + op);
  return it->second(input);
}

specm::SpecExpr Observation::rule(const std::string& op, const logic::Term& input,
                                  const std::string& out_var,
                                  const specm::SpecExpr& cont) const {
  return target.bind(bare(op, input), out_var, cont);
}

} // namespace effver::obs

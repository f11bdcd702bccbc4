#pragma once

#include "logic/domain.hpp"
#include "logic/env.hpp"
#include "logic/formula.hpp"

namespace effver::logic {

// Hooks for the extensional equivalence checker: when `collect` is set the
// evaluator does not short-circuit connectives, so the set of predicate
// applications it reports is independent of table contents.
struct EvalHooks {
  std::function<void(const std::string& pvar, const std::vector<Value>& args)> collect;
};

// Evaluates a closed (under env) term. Division and modulus by zero yield 0;
// the matching side condition is the VC generator's business.
Value eval_term(const Term& t, Env& env);

// Tarskian truth over finite carriers. Quantified variables enumerate
// carrier(ty, dom); PForall enumerates tables and is capped by dom.pred_cap.
bool eval(const Formula& f, Env& env, const DomainConfig& dom);
bool eval(const Formula& f, Env& env, const DomainConfig& dom, const EvalHooks& hooks);

} // namespace effver::logic

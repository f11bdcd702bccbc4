#pragma once

#include <map>
#include <string>

#include "logic/domain.hpp"
#include "logic/formula.hpp"
#include "logic/typecheck.hpp"

namespace effver::prover {

// Emits an SMT-LIB2 (v2.6) satisfiability query for the negation of the
// formula: unsat means the formula holds for every interpretation of its
// free predicate variables and uninterpreted functions. Integers are
// unbounded on the SMT side; events and lists become algebraic datatypes.
// Predicate variables must only occur in prenex-universal positions
// (including positive-polarity predicate quantifiers, which are hoisted);
// anything else throws UnsupportedShape. Output is byte-stable for a fixed
// input.
std::string emit_smtlib(const logic::Formula& f, const logic::DomainConfig& dom,
                        const logic::PredSig& pred_sig = {},
                        const std::map<std::string, logic::Ty>& fn_tys = {});

} // namespace effver::prover

#pragma once

#include <optional>

#include "logic/domain.hpp"
#include "logic/env.hpp"
#include "logic/formula.hpp"
#include "logic/typecheck.hpp"

namespace effver::prover {

enum class Status { Valid, CounterExample, ResourceExceeded };

// A falsifying assignment, printable for reports.
struct Cex {
  std::vector<std::pair<std::string, std::string>> assignments; // name -> shown value
  std::string show() const;
};

struct Decision {
  Status status = Status::Valid;
  std::optional<Cex> cex;
  std::string note; // resource diagnostics
};

// Decides a formula over the finite domain. Free term variables, free
// predicate variables and free uninterpreted functions are implicitly
// universal: term variables enumerate their carrier (types from `var_tys`),
// predicate variables enumerate tables under the predicate cap, functions
// enumerate tables under the function cap. Quantifiers inside the formula
// enumerate carriers. Deterministic enumeration order; the first
// counterexample is reported. Valid results are exact over the domain;
// ResourceExceeded is returned when a cap trips, never a wrong verdict.
Decision decide(const logic::Formula& f, const logic::DomainConfig& dom,
                const std::map<std::string, logic::Ty>& var_tys = {},
                const logic::PredSig& pred_sig = {},
                const std::map<std::string, logic::Ty>& fn_tys = {},
                const logic::Env& base = {});

} // namespace effver::prover

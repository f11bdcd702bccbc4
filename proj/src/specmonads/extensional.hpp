#pragma once

#include <optional>

#include "logic/domain.hpp"
#include "logic/env.hpp"
#include "specmonads/spec_expr.hpp"

namespace effver::specm {

// Extensional comparison of symbolic specs and validity of formulas with
// free predicate variables, exhaustive over ALL tables: evaluation only ever
// consults a predicate at finitely many argument tuples, and those tuples do
// not depend on table contents, so enumerating assignments over the queried
// tuples covers every table.

struct Counterexample {
  std::string description;
};

// Both specs must share a compatible shape and the same result type. env
// carries tables for uninterpreted functions appearing in the bodies.
std::optional<Counterexample> spec_equiv_witness(const SpecExpr& a, const SpecExpr& b,
                                                 const logic::DomainConfig& dom,
                                                 logic::Env env = {});

bool spec_equiv(const SpecExpr& a, const SpecExpr& b, const logic::DomainConfig& dom,
                logic::Env env = {});

// leq-style check: a <= b must hold, i.e. the order formula is valid.
// `preds` declares the free predicate variables of f.
std::optional<Counterexample> valid_witness(const logic::Formula& f,
                                            const logic::PredSig& preds,
                                            const logic::DomainConfig& dom,
                                            logic::Env env = {});

bool valid_for_all_tables(const logic::Formula& f, const logic::PredSig& preds,
                          const logic::DomainConfig& dom, logic::Env env = {});

// Pointwise semantic order between two same-shaped specs (a <= b in the
// shape's direction), used by monotonicity and Galois tests.
bool spec_leq_holds(const SpecMonadDescriptor& d, const SpecExpr& a, const SpecExpr& b,
                    const logic::DomainConfig& dom, logic::Env env = {});

} // namespace effver::specm

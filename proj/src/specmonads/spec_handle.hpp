#pragma once

#include "specmonads/spec_expr.hpp"

namespace effver::specm {

// Opaque spec-valued leaves. Operation lifting runs the symbolic wp over a
// tree whose leaves return specifications; those leaves are carried as
// reserved uninterpreted-function applications and resolved by join().
// Internal plumbing only: handles never appear in user programs or reports.

// The marker type of spec-valued terms.
logic::Ty spec_marker();

// Registers an index-variable-indexed spec template; returns the handle id.
int register_spec_handle(std::string index_var, SpecExpr spec);

// Builds the leaf term "template applied at idx".
logic::Term make_spec_handle(int id, const logic::Term& idx, const logic::Ty& idx_ty);

bool is_spec_handle(const logic::Term& t);

// Resolves a handle application: returns the refreshed template body
// instantiated at the handle's index term.
SpecExpr resolve_spec_handle(const logic::Term& t);

} // namespace effver::specm

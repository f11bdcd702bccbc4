#pragma once

#include "logic/formula.hpp"
#include "logic/term.hpp"

#include <map>
#include <optional>

namespace effver::logic {

// Declared arities of predicate variables, for formula well-formedness.
using PredSig = std::map<std::string, std::vector<Ty>>;

// Returns the unique type of a term; throws TypeError on ill-typed input.
Ty typecheck(const Term& t);

// Checks formula well-formedness: terms type-check, atoms are boolean,
// equations relate equal types, papply arities match `sig` (unknown
// predicate variables are rejected). Quantifiers extend nothing: term
// variables carry their own types.
void check_formula(const Formula& f, const PredSig& sig);

} // namespace effver::logic

#pragma once

#include "logic/formula.hpp"

namespace effver::logic {

// Eval-preserving simplification. Beta-reduces predicate redexes, folds
// literal arithmetic and comparisons, reduces projections of pairs, case of
// injections and appends of literal lists, simplifies trivial connectives
// and drops vacuous or empty-typed quantifiers. Idempotent.
Term normalize_term(const Term& t);
Formula normalize(const Formula& f);

} // namespace effver::logic

#pragma once

#include "specmonads/spec_expr.hpp"

namespace effver::specm {

// The three concrete specification-monad transformers. Applied to a backward
// descriptor they return a backward descriptor whose element type wraps the
// base's: state passes A to A x S behind a new initial-state context,
// exceptions pass A to A + E, and the update transformer (monoid: event
// lists) passes A to A x list(event) behind a history context with
// accumulating composition.
struct Transformer {
  enum class Kind { State, Exception, Update } kind;
  logic::Ty param = logic::Ty::unit(); // S or E; Update fixes list(event)
};

Transformer state_t(logic::Ty s);
Transformer exception_t(logic::Ty e);
Transformer update_t();

SpecMonadDescriptor apply_transformer(const Transformer& tr, const SpecMonadDescriptor& base);

} // namespace effver::specm

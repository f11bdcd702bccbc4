#pragma once

#include "specmonads/spec_expr.hpp"

namespace effver::specm {

// Backward predicate-transformer monads.
SpecMonadDescriptor wpure();
SpecMonadDescriptor wst(const logic::Ty& s);
SpecMonadDescriptor wexc(const logic::Ty& e);
SpecMonadDescriptor wfr();
SpecMonadDescriptor whist();
SpecMonadDescriptor whistst();
SpecMonadDescriptor wiost(const logic::Ty& s);

// Basic specification monads.
SpecMonadDescriptor pred();
SpecMonadDescriptor prepost();
SpecMonadDescriptor monsp();

// All named descriptors, for the law harness (element types fixed small).
std::vector<SpecMonadDescriptor> builtin_descriptors(const logic::Ty& s, const logic::Ty& e);

} // namespace effver::specm

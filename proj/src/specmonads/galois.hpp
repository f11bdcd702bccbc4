#pragma once

#include "specmonads/spec_expr.hpp"

namespace effver::specm {

// A pre/postcondition pair around a result type.
struct PrePostPair {
  logic::Ty result = logic::Ty::unit();
  std::string result_var;   // bound in post
  logic::Formula pre = logic::Formula::top();
  logic::Formula post = logic::Formula::top();
};

PrePostPair pair_of_spec(const SpecExpr& w);   // from a prepost-shaped spec
SpecExpr spec_of_pair(const PrePostPair& pp);  // back

// pre /\ (forall a. post a ==> p a) : the embedding into backward
// predicate transformers.
SpecExpr galois_prepost_to_wpure(const PrePostPair& pp);

// ( w(fun a -> true), fun a -> forallP p. w p ==> p a ) : the
// approximation; the predicate quantifier discharges by enumeration.
PrePostPair wpure_to_prepost(const SpecExpr& w);

// The predicate monad embeds as the trivial-precondition pair; pairs
// approximate by dropping the precondition.
PrePostPair galois_pred_to_prepost(const SpecExpr& p);
SpecExpr galois_prepost_to_pred(const PrePostPair& pp);

} // namespace effver::specm

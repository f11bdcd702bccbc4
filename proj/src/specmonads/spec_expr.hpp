#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "logic/formula.hpp"
#include "logic/typecheck.hpp"

namespace effver::specm {

// The binding structure of a specification-monad element:
//  - backward transformer shapes bind one or more postcondition predicate
//    variables plus context term binders (initial state, history);
//  - the predicate monad and the forward transformer bind result term
//    variables instead (and the forward transformer a nullary precondition
//    predicate);
//  - the pre/post monad has two formula components.
struct PostDecl {
  std::string hint;              // display name: p, q, pre
  std::vector<logic::Ty> args;   // argument types; empty = nullary
};

struct SpecShape {
  std::string name;                    // wpure, wst, wexc, wfr, whist, whistst, wiost,
                                       // pred, prepost, monsp, or a transformer-built name
  logic::Ty result = logic::Ty::unit();
  std::vector<logic::Binder> contexts; // binder hints + types
  std::vector<PostDecl> posts;
  std::vector<logic::Binder> results;  // pred / monsp result binders
  int components = 1;                  // prepost: 2 (pre, post)
  bool backward = true;                // order direction of the leq rule

  bool compatible(const SpecShape& o) const; // same structure, any result type
  bool operator==(const SpecShape& o) const;
  std::string show() const;
};

// A symbolic element of a specification monad: formulas whose predicate
// variables are exactly the shape's post binders and whose designated free
// term variables are the context/result binders. All occurrences of post
// variables must be positive.
struct SpecExpr {
  SpecShape shape;
  std::vector<std::string> posts;    // actual bound predicate-variable names
  std::vector<std::string> contexts; // actual bound context term-variable names
  std::vector<std::string> results;  // actual bound result term-variable names
  std::vector<logic::Formula> bodies;

  const logic::Formula& body(size_t i = 0) const { return bodies[i]; }
};

// True when every occurrence of `pvar` in f is in positive polarity.
bool positive_in(const logic::Formula& f, const std::string& pvar);

// Validates binder/arity/positivity wiring; throws ShapeMismatch/TypeError.
void check_spec(const SpecExpr& w);

// Normalizes all bodies.
SpecExpr normalize_spec(const SpecExpr& w);

// Alpha-comparison of two same-shaped specs (binder names may differ).
bool spec_alpha_equal(const SpecExpr& a, const SpecExpr& b);

// Renames all binders to fresh names; returns the renamed spec.
SpecExpr refresh_spec(const SpecExpr& w);

// Pretty-prints in the surface notation: fun p s0 -> body.
std::string show_spec(const SpecExpr& w);

// An ordered-monad descriptor: symbolic ret/bind/leq rules sharing a shape
// family. `bind` takes the value binder used by the continuation's bodies.
struct SpecMonadDescriptor {
  std::string name;
  std::function<SpecShape(const logic::Ty& result)> shape_of;
  std::function<SpecExpr(const logic::Term& v)> ret;
  std::function<SpecExpr(const SpecExpr& w, const std::string& binder, const SpecExpr& f)> bind;
  // leq(w1, w2): free predicate variables are implicitly universal; context
  // binders are quantified inside.
  std::function<logic::Formula(const SpecExpr& w1, const SpecExpr& w2)> leq;
  // join(w) for nested specs built with spec_handle terms; empty when the
  // monad does not support operation lifting.
  std::function<SpecExpr(const SpecExpr& w)> join;
};

} // namespace effver::specm

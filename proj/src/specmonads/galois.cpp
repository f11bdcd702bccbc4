#include "specmonads/galois.hpp"

#include "logic/errors.hpp"
#include "logic/fresh.hpp"
#include "logic/subst.hpp"
#include "specmonads/descriptors.hpp"

namespace effver::specm {

using logic::Formula;
using logic::fresh_name;
using logic::Term;
using logic::Ty;

PrePostPair pair_of_spec(const SpecExpr& w) {
  if (w.shape.components != 2) throw ShapeMismatch("expected a pre/post pair");
  return PrePostPair{w.shape.result, w.results[0], w.bodies[0], w.bodies[1]};
}

SpecExpr spec_of_pair(const PrePostPair& pp) {
  SpecExpr w;
  w.shape = prepost().shape_of(pp.result);
  w.results = {pp.result_var};
  w.bodies = {pp.pre, pp.post};
  check_spec(w);
  return w;
}

SpecExpr galois_prepost_to_wpure(const PrePostPair& pp) {
  std::string p = fresh_name("p");
  std::string a = fresh_name("a");
  Term av = Term::var(a, pp.result);
  Formula post = logic::subst_formula(pp.post, pp.result_var, av);
  Formula body = Formula::conj(
      pp.pre, Formula::forall(a, pp.result, Formula::impl(post, Formula::papply(p, {av}))));
  SpecExpr w;
  w.shape = wpure().shape_of(pp.result);
  w.posts = {p};
  w.bodies = {body};
  check_spec(w);
  return w;
}

PrePostPair wpure_to_prepost(const SpecExpr& w) {
  if (!wpure().shape_of(w.shape.result).compatible(w.shape))
    throw ShapeMismatch("expected a backward predicate transformer");
  const Ty& a = w.shape.result;
  // pre: w at the trivial postcondition
  std::string x = fresh_name("a");
  Formula pre = logic::subst_pred(w.bodies[0], w.posts[0],
                                  logic::make_abs({{x, a}}, Formula::top()));
  // post: a is a possible outcome under every postcondition w allows
  std::string av = fresh_name("a");
  std::string p = fresh_name("p");
  Formula body = logic::rename_pred(w.bodies[0], w.posts[0], p);
  Formula post = Formula::pforall(
      p, {a}, Formula::impl(body, Formula::papply(p, {Term::var(av, a)})));
  return PrePostPair{a, av, pre, post};
}

PrePostPair galois_pred_to_prepost(const SpecExpr& p) {
  if (!pred().shape_of(p.shape.result).compatible(p.shape))
    throw ShapeMismatch("expected a predicate-monad spec");
  return PrePostPair{p.shape.result, p.results[0], Formula::top(), p.bodies[0]};
}

SpecExpr galois_prepost_to_pred(const PrePostPair& pp) {
  SpecExpr w;
  w.shape = pred().shape_of(pp.result);
  w.results = {pp.result_var};
  w.bodies = {pp.post}; // the precondition is dropped; stated approximation
  check_spec(w);
  return w;
}

} // namespace effver::specm

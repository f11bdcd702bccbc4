#pragma once

// Random well-shaped specification expressions for the law harness.

#include <optional>
#include <random>

#include "logic/fresh.hpp"
#include "specmonads/spec_expr.hpp"
#include "support/gen.hpp"

namespace effver::testgen {

using logic::Binder;
using logic::Formula;
using logic::Term;
using logic::Ty;
using specm::SpecExpr;
using specm::SpecMonadDescriptor;
using specm::SpecShape;

// A primitive spec of the descriptor's shape at result type A. Bodies apply
// the post variables at a handful of generated argument tuples, optionally
// under small guards and int quantifiers, so queried-point sets stay small.
inline SpecExpr primitive_spec(std::mt19937_64& rng, const SpecMonadDescriptor& d, const Ty& a,
                               const std::vector<Binder>& extra_scope,
                               bool no_arith = false) {
  SpecShape shape = d.shape_of(a);
  SpecExpr w;
  w.shape = shape;
  std::vector<Binder> scope = extra_scope;
  for (const auto& c : shape.contexts) {
    w.contexts.push_back(logic::fresh_name(c.name));
    scope.push_back({w.contexts.back(), c.ty});
  }
  for (const auto& r : shape.results) {
    w.results.push_back(logic::fresh_name(r.name));
    scope.push_back({w.results.back(), r.ty});
  }
  for (const auto& p : shape.posts) w.posts.push_back(logic::fresh_name(p.hint));

  TermGen tg{rng, scope, no_arith};
  auto irand = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  auto post_app = [&](size_t which, TermGen& gen) {
    std::vector<Term> args;
    for (const auto& ty : shape.posts[which].args) args.push_back(gen.gen(ty, 1));
    return Formula::papply(w.posts[which], args);
  };

  if (shape.components == 2) {
    // pre/post pair: a small closed precondition and a postcondition over
    // the result binder
    Formula pre = irand(0, 3) == 0 ? Formula::bot() : Formula::top();
    Formula post = Formula::eq(Term::var(w.results[0], a), tg.gen(a, 1));
    if (irand(0, 1))
      post = Formula::disj(post, Formula::eq(Term::var(w.results[0], a), tg.gen(a, 1)));
    w.bodies = {pre, post};
    specm::check_spec(w);
    return w;
  }

  Formula body = Formula::top();
  if (!shape.posts.empty()) {
    switch (irand(0, 5)) {
      case 0: body = Formula::top(); break;
      case 1: body = Formula::bot(); break;
      case 2: body = post_app(0, tg); break;
      case 3: body = Formula::conj(post_app(0, tg), post_app(0, tg)); break;
      case 4: {
        std::string x = logic::fresh_name("x");
        auto inner_scope = scope;
        inner_scope.push_back({x, Ty::integer()});
        TermGen tg2{rng, inner_scope, no_arith};
        body = Formula::forall(
            x, Ty::integer(),
            Formula::impl(Formula::atom(Term::cmp(Term::CmpOp::Le, Term::var(x, Ty::integer()),
                                                  Term::lit_integer(irand(0, 2)))),
                          post_app(0, tg2)));
        break;
      }
      default: {
        Formula guard = Formula::eq(tg.gen(Ty::integer(), 1), Term::lit_integer(irand(0, 2)));
        body = Formula::impl(guard, post_app(0, tg));
        break;
      }
    }
    // exceptional post, when present
    if (shape.posts.size() > 1 && irand(0, 1)) body = Formula::conj(body, post_app(1, tg));
  }
  if (!shape.results.empty()) {
    // predicate monad / forward transformer: relate the result binder
    Formula rel = Formula::eq(Term::var(w.results[0], a), tg.gen(a, 1));
    if (irand(0, 1))
      rel = Formula::disj(rel, Formula::eq(Term::var(w.results[0], a), tg.gen(a, 1)));
    body = shape.posts.empty() ? rel : Formula::conj(body, rel);
  }
  w.bodies = {body};
  specm::check_spec(w);
  return w;
}

// A spec with optional bind structure. `free_var`, when given, is in scope
// for generated argument terms (the continuation side of bind laws).
inline SpecExpr random_spec(std::mt19937_64& rng, const SpecMonadDescriptor& d, const Ty& a,
                            int depth, std::vector<Binder> extra_scope = {},
                            bool no_arith = false) {
  auto irand = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (depth <= 0 || irand(0, 1) == 0) return primitive_spec(rng, d, a, extra_scope, no_arith);
  // bind of two smaller ones through a fresh value binder
  Ty mid = irand(0, 1) ? Ty::integer() : Ty::boolean();
  SpecExpr w = random_spec(rng, d, mid, depth - 1, extra_scope, no_arith);
  std::string x = logic::fresh_name("x");
  auto inner = extra_scope;
  inner.push_back({x, mid});
  SpecExpr f = random_spec(rng, d, a, depth - 1, inner, no_arith);
  return d.bind(w, x, f);
}

} // namespace effver::testgen

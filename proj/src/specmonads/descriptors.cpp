#include "specmonads/descriptors.hpp"

#include "logic/errors.hpp"
#include "logic/fresh.hpp"
#include "logic/subst.hpp"
#include "logic/typecheck.hpp"
#include "specmonads/spec_handle.hpp"

namespace effver::specm {

using logic::Binder;
using logic::Formula;
using logic::fresh_name;
using logic::PredAbs;
using logic::Term;
using logic::Ty;

namespace {

Ty event_list() { return Ty::list(Ty::event()); }

SpecExpr mk(SpecShape shape, std::vector<std::string> posts, std::vector<std::string> ctxs,
            std::vector<std::string> results, std::vector<Formula> bodies) {
  SpecExpr w{std::move(shape), std::move(posts), std::move(ctxs), std::move(results),
             std::move(bodies)};
  check_spec(w);
  return w;
}

void want_shape(const SpecMonadDescriptor& d, const SpecExpr& w, const char* who) {
  if (!d.shape_of(w.shape.result).compatible(w.shape))
    throw ShapeMismatch(std::string(who) + ": expected a " + d.name + " spec, found " +
                        w.shape.show());
}

// Unifies two same-shaped specs on fresh binder names and returns the
// pointwise order formula: forall ctx/result. (strong side) ==> (weak side),
// with post variables left free (implicitly universal).
Formula pointwise_leq(const SpecExpr& w1, const SpecExpr& w2, bool backward) {
  Formula f1 = w1.bodies[0];
  Formula f2 = w2.bodies[0];
  std::vector<Binder> quant;
  for (size_t i = 0; i < w1.posts.size(); ++i) {
    std::string p = fresh_name(w1.shape.posts[i].hint);
    f1 = logic::rename_pred(f1, w1.posts[i], p);
    f2 = logic::rename_pred(f2, w2.posts[i], p);
  }
  auto unify_vars = [&](const std::vector<std::string>& n1, const std::vector<std::string>& n2,
                        const std::vector<Binder>& decls) {
    for (size_t i = 0; i < n1.size(); ++i) {
      std::string v = fresh_name(decls[i].name);
      f1 = logic::subst_formula(f1, n1[i], Term::var(v, decls[i].ty));
      f2 = logic::subst_formula(f2, n2[i], Term::var(v, decls[i].ty));
      quant.push_back({v, decls[i].ty});
    }
  };
  unify_vars(w1.contexts, w2.contexts, w1.shape.contexts);
  unify_vars(w1.results, w2.results, w1.shape.results);
  Formula impl = backward ? Formula::impl(f2, f1) : Formula::impl(f1, f2);
  for (auto it = quant.rbegin(); it != quant.rend(); ++it)
    impl = Formula::forall(it->name, it->ty, impl);
  return impl;
}

// ---- generic backward-transformer builder ----------------------------------
//
// Every backward monad here is assembled from the same skeleton. The pieces
// that differ are how a continuation spec is spliced in at an application
// site of the first post variable (the value and shape-specific extra
// arguments), and the context plumbing.

struct BackwardFamily {
  std::string name;
  // shape pieces for result type A
  std::function<std::vector<PostDecl>(const Ty& a)> posts_of;
  std::vector<Binder> ctx_decls;

  // ret: builds post-0 application arguments from the value term and the
  // fresh context variables
  std::function<std::vector<Term>(const Term& v, const std::vector<Term>& ctx)> ret_args;

  // splice(k, extras, final posts, final ctx vars): the formula standing for
  // "continue with spec k" at an application site whose shape-specific extra
  // arguments are `extras`
  std::function<Formula(const SpecExpr& k, const std::vector<Term>& extras,
                        const std::vector<std::string>& posts,
                        const std::vector<Term>& ctx)>
      splice;
};

SpecMonadDescriptor make_backward(const BackwardFamily fam) {
  SpecMonadDescriptor d;
  d.name = fam.name;
  d.shape_of = [fam](const Ty& a) {
    SpecShape s;
    s.name = fam.name;
    s.result = a;
    s.posts = fam.posts_of(a);
    s.contexts = fam.ctx_decls;
    s.backward = true;
    return s;
  };
  auto shape_of = d.shape_of;
  d.ret = [fam, shape_of](const Term& v) {
    Ty a = logic::typecheck(v);
    SpecShape shape = shape_of(a);
    std::vector<std::string> posts, ctxs;
    std::vector<Term> ctxTerms;
    for (const auto& p : shape.posts) posts.push_back(fresh_name(p.hint));
    for (const auto& c : shape.contexts) {
      ctxs.push_back(fresh_name(c.name));
      ctxTerms.push_back(Term::var(ctxs.back(), c.ty));
    }
    Formula body = Formula::papply(posts[0], fam.ret_args(v, ctxTerms));
    return mk(shape, posts, ctxs, {}, {body});
  };
  d.bind = [fam, shape_of, d](const SpecExpr& w, const std::string& binder,
                              const SpecExpr& f) {
    want_shape(d, w, "bind");
    want_shape(d, f, "bind");
    SpecShape shape = shape_of(f.shape.result);
    std::vector<std::string> posts, ctxs;
    std::vector<Term> ctxTerms;
    for (const auto& p : shape.posts) posts.push_back(fresh_name(p.hint));
    for (const auto& c : shape.contexts) {
      ctxs.push_back(fresh_name(c.name));
      ctxTerms.push_back(Term::var(ctxs.back(), c.ty));
    }
    Ty a = w.shape.result;
    Formula body = logic::subst_pred_fn(
        w.bodies[0], w.posts[0], [&](const std::vector<Term>& args) {
          SpecExpr k = f;
          k.bodies[0] = logic::subst_formula(k.bodies[0], binder, args[0]);
          std::vector<Term> extras(args.begin() + 1, args.end());
          return fam.splice(k, extras, posts, ctxTerms);
        });
    // secondary posts (the exceptional one) pass through
    for (size_t i = 1; i < w.posts.size(); ++i)
      body = logic::rename_pred(body, w.posts[i], posts[i]);
    // contexts rebind to the fresh ones
    std::map<std::string, Term> repl;
    for (size_t i = 0; i < w.contexts.size(); ++i) repl.emplace(w.contexts[i], ctxTerms[i]);
    if (!repl.empty()) body = logic::subst_formula_many(body, repl);
    (void)a;
    return mk(shape, posts, ctxs, {}, {body});
  };
  d.leq = [d](const SpecExpr& w1, const SpecExpr& w2) {
    want_shape(d, w1, "leq");
    want_shape(d, w2, "leq");
    if (!(w1.shape.result == w2.shape.result))
      throw ShapeMismatch("leq: result types differ");
    return pointwise_leq(w1, w2, /*backward=*/true);
  };
  d.join = [fam, shape_of, d](const SpecExpr& nested) {
    want_shape(d, nested, "join");
    // Applications of the first post carry a spec-valued leaf first.
    SpecShape shape;
    bool shaped = false;
    std::vector<std::string> posts, ctxs;
    std::vector<Term> ctxTerms;
    auto ensure = [&](const Ty& resultTy) {
      if (shaped) return;
      shape = shape_of(resultTy);
      for (const auto& p : shape.posts) posts.push_back(fresh_name(p.hint));
      for (const auto& c : shape.contexts) {
        ctxs.push_back(fresh_name(c.name));
        ctxTerms.push_back(Term::var(ctxs.back(), c.ty));
      }
      shaped = true;
    };
    Formula body = logic::subst_pred_fn(
        nested.bodies[0], nested.posts[0], [&](const std::vector<Term>& args) {
          SpecExpr k = resolve_spec_handle(args[0]);
          ensure(k.shape.result);
          std::vector<Term> extras(args.begin() + 1, args.end());
          return fam.splice(k, extras, posts, ctxTerms);
        });
    ensure(nested.shape.result); // no application sites: keep nested's type
    for (size_t i = 1; i < nested.posts.size(); ++i)
      body = logic::rename_pred(body, nested.posts[i], posts[i]);
    std::map<std::string, Term> repl;
    for (size_t i = 0; i < nested.contexts.size(); ++i)
      repl.emplace(nested.contexts[i], ctxTerms[i]);
    if (!repl.empty()) body = logic::subst_formula_many(body, repl);
    return mk(shape, posts, ctxs, {}, {body});
  };
  return d;
}

// splices a continuation spec with no context threading: rename posts only
Formula splice_simple(const SpecExpr& k, const std::vector<std::string>& posts) {
  Formula body = k.bodies[0];
  for (size_t i = 0; i < k.posts.size(); ++i)
    body = logic::rename_pred(body, k.posts[i], posts[i]);
  return body;
}

} // namespace

SpecMonadDescriptor wpure() {
  BackwardFamily fam;
  fam.name = "wpure";
  fam.posts_of = [](const Ty& a) { return std::vector<PostDecl>{{"p", {a}}}; };
  fam.ret_args = [](const Term& v, const std::vector<Term>&) {
    return std::vector<Term>{v};
  };
  fam.splice = [](const SpecExpr& k, const std::vector<Term>&,
                  const std::vector<std::string>& posts, const std::vector<Term>&) {
    return splice_simple(k, posts);
  };
  return make_backward(fam);
}

SpecMonadDescriptor wst(const Ty& s) {
  BackwardFamily fam;
  fam.name = "wst";
  fam.posts_of = [s](const Ty& a) { return std::vector<PostDecl>{{"p", {a, s}}}; };
  fam.ctx_decls = {{"s0", s}};
  fam.ret_args = [](const Term& v, const std::vector<Term>& ctx) {
    return std::vector<Term>{v, ctx[0]};
  };
  fam.splice = [](const SpecExpr& k, const std::vector<Term>& extras,
                  const std::vector<std::string>& posts, const std::vector<Term>&) {
    // state threads: continuation starts at the application's state
    Formula body = splice_simple(k, posts);
    return logic::subst_formula(body, k.contexts[0], extras[0]);
  };
  return make_backward(fam);
}

SpecMonadDescriptor wexc(const Ty& e) {
  BackwardFamily fam;
  fam.name = "wexc";
  fam.posts_of = [e](const Ty& a) {
    return std::vector<PostDecl>{{"p", {a}}, {"q", {e}}};
  };
  fam.ret_args = [](const Term& v, const std::vector<Term>&) {
    return std::vector<Term>{v};
  };
  fam.splice = [](const SpecExpr& k, const std::vector<Term>&,
                  const std::vector<std::string>& posts, const std::vector<Term>&) {
    return splice_simple(k, posts);
  };
  return make_backward(fam);
}

namespace {

// An events-accumulating splice shared by the free and history monads: the
// continuation's own events log2 lands after the prefix log1 produced so far.
Formula splice_accumulating(const SpecExpr& k, const Term& log1,
                            const std::vector<std::string>& posts,
                            const std::optional<Term>& ctx_for_k) {
  Ty evl = Ty::list(Ty::event());
  const Ty& b = k.shape.result;
  std::string y = fresh_name("y");
  std::string log2 = fresh_name("log");
  Formula inner = Formula::papply(
      posts[0], {Term::var(y, b), Term::append(log1, Term::var(log2, evl))});
  Formula body = logic::subst_pred(k.bodies[0], k.posts[0],
                                   logic::make_abs({{y, b}, {log2, evl}}, inner));
  if (ctx_for_k) body = logic::subst_formula(body, k.contexts[0], *ctx_for_k);
  return body;
}

} // namespace

SpecMonadDescriptor wfr() {
  BackwardFamily fam;
  fam.name = "wfr";
  fam.posts_of = [](const Ty& a) {
    return std::vector<PostDecl>{{"p", {a, event_list()}}};
  };
  fam.ret_args = [](const Term& v, const std::vector<Term>&) {
    return std::vector<Term>{v, Term::list_lit(Ty::event(), {})};
  };
  fam.splice = [](const SpecExpr& k, const std::vector<Term>& extras,
                  const std::vector<std::string>& posts, const std::vector<Term>&) {
    return splice_accumulating(k, extras[0], posts, std::nullopt);
  };
  return make_backward(fam);
}

SpecMonadDescriptor whist() {
  BackwardFamily fam;
  fam.name = "whist";
  fam.posts_of = [](const Ty& a) {
    return std::vector<PostDecl>{{"p", {a, event_list()}}};
  };
  fam.ctx_decls = {{"h", event_list()}};
  fam.ret_args = [](const Term& v, const std::vector<Term>&) {
    return std::vector<Term>{v, Term::list_lit(Ty::event(), {})};
  };
  fam.splice = [](const SpecExpr& k, const std::vector<Term>& extras,
                  const std::vector<std::string>& posts, const std::vector<Term>& ctx) {
    // the continuation's history is the current one extended by the events
    // produced so far
    return splice_accumulating(k, extras[0], posts, Term::append(ctx[0], extras[0]));
  };
  return make_backward(fam);
}

SpecMonadDescriptor whistst() {
  BackwardFamily fam;
  fam.name = "whistst";
  fam.posts_of = [](const Ty& a) {
    return std::vector<PostDecl>{{"p", {a, event_list()}}};
  };
  fam.ctx_decls = {{"h", event_list()}};
  fam.ret_args = [](const Term& v, const std::vector<Term>& ctx) {
    // ghost state: the history passes through unchanged
    return std::vector<Term>{v, ctx[0]};
  };
  fam.splice = [](const SpecExpr& k, const std::vector<Term>& extras,
                  const std::vector<std::string>& posts, const std::vector<Term>&) {
    // the application's history overwrites the continuation's context
    Formula body = splice_simple(k, posts);
    return logic::subst_formula(body, k.contexts[0], extras[0]);
  };
  return make_backward(fam);
}

SpecMonadDescriptor wiost(const Ty& s) {
  BackwardFamily fam;
  fam.name = "wiost";
  fam.posts_of = [s](const Ty& a) {
    return std::vector<PostDecl>{{"p", {a, s, event_list()}}};
  };
  fam.ctx_decls = {{"s0", s}, {"h", event_list()}};
  fam.ret_args = [](const Term& v, const std::vector<Term>& ctx) {
    return std::vector<Term>{v, ctx[0], Term::list_lit(Ty::event(), {})};
  };
  fam.splice = [s](const SpecExpr& k, const std::vector<Term>& extras,
                   const std::vector<std::string>& posts, const std::vector<Term>& ctx) {
    // extras = (state after, events so far); state threads, events accumulate
    Ty evl = event_list();
    const Ty& b = k.shape.result;
    std::string y = fresh_name("y");
    std::string s2 = fresh_name("s");
    std::string log2 = fresh_name("log");
    Formula inner = Formula::papply(
        posts[0], {Term::var(y, b), Term::var(s2, s),
                   Term::append(extras[1], Term::var(log2, evl))});
    Formula body = logic::subst_pred(
        k.bodies[0], k.posts[0],
        logic::make_abs({{y, b}, {s2, s}, {log2, evl}}, inner));
    body = logic::subst_formula_many(
        body, {{k.contexts[0], extras[0]},
               {k.contexts[1], Term::append(ctx[1], extras[1])}});
    return body;
  };
  return make_backward(fam);
}

SpecMonadDescriptor pred() {
  SpecMonadDescriptor d;
  d.name = "pred";
  d.shape_of = [](const Ty& a) {
    SpecShape s;
    s.name = "pred";
    s.result = a;
    s.results = {{"y", a}};
    s.backward = false;
    return s;
  };
  auto shape_of = d.shape_of;
  d.ret = [shape_of](const Term& v) {
    Ty a = logic::typecheck(v);
    std::string y = fresh_name("y");
    return mk(shape_of(a), {}, {}, {y}, {Formula::eq(Term::var(y, a), v)});
  };
  d.bind = [shape_of, d](const SpecExpr& w, const std::string& binder, const SpecExpr& f) {
    want_shape(d, w, "bind");
    want_shape(d, f, "bind");
    Ty a = w.shape.result;
    Ty b = f.shape.result;
    std::string bres = fresh_name("y");
    std::string av = fresh_name("a");
    Formula wa = logic::subst_formula(w.bodies[0], w.results[0], Term::var(av, a));
    Formula fb = logic::subst_formula_many(
        f.bodies[0], {{binder, Term::var(av, a)}, {f.results[0], Term::var(bres, b)}});
    Formula body = Formula::exists(av, a, Formula::conj(wa, fb));
    return mk(shape_of(b), {}, {}, {bres}, {body});
  };
  d.leq = [d](const SpecExpr& w1, const SpecExpr& w2) {
    want_shape(d, w1, "leq");
    want_shape(d, w2, "leq");
    return pointwise_leq(w1, w2, /*backward=*/false);
  };
  return d;
}

SpecMonadDescriptor prepost() {
  SpecMonadDescriptor d;
  d.name = "prepost";
  d.shape_of = [](const Ty& a) {
    SpecShape s;
    s.name = "prepost";
    s.result = a;
    s.results = {{"a", a}};
    s.components = 2;
    s.backward = false;
    return s;
  };
  auto shape_of = d.shape_of;
  d.ret = [shape_of](const Term& v) {
    Ty a = logic::typecheck(v);
    std::string av = fresh_name("a");
    return mk(shape_of(a), {}, {}, {av},
              {Formula::top(), Formula::eq(Term::var(av, a), v)});
  };
  d.bind = [shape_of, d](const SpecExpr& w, const std::string& binder, const SpecExpr& f) {
    want_shape(d, w, "bind");
    want_shape(d, f, "bind");
    Ty a = w.shape.result;
    Ty b = f.shape.result;
    std::string av = fresh_name("a");
    std::string bres = fresh_name("a");
    Term avar = Term::var(av, a);
    Formula wpost = logic::subst_formula(w.bodies[1], w.results[0], avar);
    Formula fpre = logic::subst_formula(f.bodies[0], binder, avar);
    Formula pre =
        Formula::conj(w.bodies[0], Formula::forall(av, a, Formula::impl(wpost, fpre)));
    Formula fpost = logic::subst_formula_many(
        f.bodies[1], {{binder, avar}, {f.results[0], Term::var(bres, b)}});
    Formula post = Formula::exists(av, a, Formula::conj(wpost, fpost));
    return mk(shape_of(b), {}, {}, {bres}, {pre, post});
  };
  d.leq = [d](const SpecExpr& w1, const SpecExpr& w2) {
    want_shape(d, w1, "leq");
    want_shape(d, w2, "leq");
    // backward on preconditions, forward on postconditions
    Formula pre = Formula::impl(w2.bodies[0], w1.bodies[0]);
    std::string av = fresh_name("a");
    Term avar = Term::var(av, w1.shape.result);
    Formula p1 = logic::subst_formula(w1.bodies[1], w1.results[0], avar);
    Formula p2 = logic::subst_formula(w2.bodies[1], w2.results[0], avar);
    Formula post = Formula::forall(av, w1.shape.result, Formula::impl(p1, p2));
    return Formula::conj(pre, post);
  };
  return d;
}

SpecMonadDescriptor monsp() {
  SpecMonadDescriptor d;
  d.name = "monsp";
  d.shape_of = [](const Ty& a) {
    SpecShape s;
    s.name = "monsp";
    s.result = a;
    s.posts = {{"pre", {}}};
    s.results = {{"a", a}};
    s.backward = false;
    return s;
  };
  auto shape_of = d.shape_of;
  d.ret = [shape_of](const Term& v) {
    Ty a = logic::typecheck(v);
    std::string pre = fresh_name("pre");
    std::string av = fresh_name("a");
    Formula body =
        Formula::conj(Formula::papply(pre, {}), Formula::eq(Term::var(av, a), v));
    return mk(shape_of(a), {pre}, {}, {av}, {body});
  };
  d.bind = [shape_of, d](const SpecExpr& w, const std::string& binder, const SpecExpr& f) {
    want_shape(d, w, "bind");
    want_shape(d, f, "bind");
    Ty a = w.shape.result;
    Ty b = f.shape.result;
    std::string pre = fresh_name("pre");
    std::string bres = fresh_name("a");
    std::string av = fresh_name("a");
    Term avar = Term::var(av, a);
    // the first computation's strongest-post at value a, threading the
    // ambient precondition
    Formula wa = logic::subst_formula(
        logic::rename_pred(w.bodies[0], w.posts[0], pre), w.results[0], avar);
    Formula fb = logic::subst_formula_many(
        f.bodies[0], {{binder, avar}, {f.results[0], Term::var(bres, b)}});
    fb = logic::subst_pred(fb, f.posts[0], logic::make_abs({}, wa));
    Formula body = Formula::exists(av, a, fb);
    return mk(shape_of(b), {pre}, {}, {bres}, {body});
  };
  d.leq = [d](const SpecExpr& w1, const SpecExpr& w2) {
    want_shape(d, w1, "leq");
    want_shape(d, w2, "leq");
    return pointwise_leq(w1, w2, /*backward=*/false);
  };
  return d;
}

std::vector<SpecMonadDescriptor> builtin_descriptors(const Ty& s, const Ty& e) {
  return {wpure(), wst(s), wexc(e), wfr(), whist(), whistst(), wiost(s),
          pred(), prepost(), monsp()};
}

} // namespace effver::specm

#include <doctest.h>

#include "logic/eval.hpp"
#include "logic/normalize.hpp"
#include "logic/pretty.hpp"
#include "logic/subst.hpp"
#include "specmonads/descriptors.hpp"
#include "specmonads/extensional.hpp"
#include "specmonads/galois.hpp"
#include "specmonads/spec_handle.hpp"
#include "specmonads/transformers.hpp"
#include "support/specgen.hpp"

using namespace effver;
using namespace effver::specm;
using logic::DomainConfig;
using logic::Env;
using logic::Formula;
using logic::Term;
using logic::Ty;
using logic::Value;

namespace {

DomainConfig law_dom() {
  DomainConfig dom;
  dom.int_lo = 0;
  dom.int_hi = 2; // carriers of size 3, exhaustive
  dom.list_bound = 1;
  dom.pred_cap = 16;
  return dom;
}

Term ilit(int64_t v) { return Term::lit_integer(v); }

// write-style history spec: fun p h -> p ((), [Out o])
SpecExpr write_spec(int64_t o, const SpecMonadDescriptor& d) {
  SpecShape shape = d.shape_of(Ty::unit());
  SpecExpr w;
  w.shape = shape;
  for (const auto& p : shape.posts) w.posts.push_back(logic::fresh_name(p.hint));
  for (const auto& c : shape.contexts) w.contexts.push_back(logic::fresh_name(c.name));
  Ty ev = Ty::event();
  w.bodies = {Formula::papply(
      w.posts[0],
      {Term::lit_unit(), Term::list_lit(ev, {Term::enum_ctor(ev, "Out", {ilit(o)})})})};
  check_spec(w);
  return w;
}

} // namespace

TEST_CASE("backward ret rules print in the expected surface form") {
  CHECK(show_spec(normalize_spec(wpure().ret(ilit(3)))) == "fun p -> p 3");
  CHECK(show_spec(normalize_spec(wst(Ty::integer()).ret(Term::lit_unit()))) ==
        "fun p s0 -> p ((), s0)");
  CHECK(show_spec(normalize_spec(whist().ret(ilit(5)))) == "fun p h -> p (5, [])");
  CHECK(show_spec(normalize_spec(wexc(Ty::boolean()).ret(ilit(1)))) == "fun p q -> p 1");
  CHECK(show_spec(normalize_spec(wiost(Ty::integer()).ret(ilit(0)))) ==
        "fun p s0 h -> p (0, s0, [])");
}

TEST_CASE("wpure: left unit becomes the continuation after normalize") {
  auto d = wpure();
  std::string x = logic::fresh_name("x");
  // f = fun p -> p (x+1)
  SpecExpr f;
  f.shape = d.shape_of(Ty::integer());
  f.posts = {logic::fresh_name("p")};
  f.bodies = {Formula::papply(
      f.posts[0], {Term::arith(Term::ArithOp::Add, Term::var(x, Ty::integer()), ilit(1))})};
  check_spec(f);
  SpecExpr bound = normalize_spec(d.bind(d.ret(ilit(3)), x, f));
  CHECK(show_spec(bound) == "fun p -> p 4");
}

TEST_CASE("wpure: a single requirement sits below the conjunction of both") {
  // order: w1 <= w2 iff forall p. w2 p ==> w1 p; requiring p at both 1 and 2
  // yields the stronger precondition, so it sits above requiring p at 1 only
  auto d = wpure();
  DomainConfig dom = law_dom();
  dom.int_hi = 3; // carriers <= 4
  std::string p1 = logic::fresh_name("p");
  SpecExpr both;
  both.shape = d.shape_of(Ty::integer());
  both.posts = {p1};
  both.bodies = {
      Formula::conj(Formula::papply(p1, {ilit(1)}), Formula::papply(p1, {ilit(2)}))};
  std::string p2 = logic::fresh_name("p");
  SpecExpr single;
  single.shape = d.shape_of(Ty::integer());
  single.posts = {p2};
  single.bodies = {Formula::papply(p2, {ilit(1)})};
  CHECK(spec_leq_holds(d, single, both, dom));
  CHECK(!spec_leq_holds(d, both, single, dom));
}

TEST_CASE("wst: sequencing get with put of a function gives the rolled-up spec") {
  Ty S = Ty::integer();
  auto d = wst(S);
  Ty fty = Ty::fn(S, S);
  // get spec: fun p s0 -> p (s0, s0)
  SpecExpr getw;
  getw.shape = d.shape_of(S);
  getw.posts = {logic::fresh_name("p")};
  getw.contexts = {logic::fresh_name("s0")};
  getw.bodies = {Formula::papply(getw.posts[0], {Term::var(getw.contexts[0], S),
                                                 Term::var(getw.contexts[0], S)})};
  check_spec(getw);
  // put (f x) spec: fun p s0 -> p ((), f x)
  std::string x = logic::fresh_name("x");
  SpecExpr putw;
  putw.shape = d.shape_of(Ty::unit());
  putw.posts = {logic::fresh_name("p")};
  putw.contexts = {logic::fresh_name("s0")};
  putw.bodies = {Formula::papply(
      putw.posts[0], {Term::lit_unit(), Term::apply("f", fty, Term::var(x, S))})};
  check_spec(putw);

  SpecExpr composite = normalize_spec(d.bind(getw, x, putw));
  CHECK(show_spec(composite) == "fun p s0 -> p ((), f s0)");
}

TEST_CASE("wst leq is reflexive on random specs") {
  std::mt19937_64 rng(31);
  auto d = wst(Ty::integer());
  DomainConfig dom = law_dom();
  for (int i = 0; i < 50; ++i) {
    SpecExpr w = testgen::random_spec(rng, d, Ty::integer(), 1);
    CHECK(spec_leq_holds(d, w, w, dom));
  }
}

TEST_CASE("whist: sequencing two writes concatenates the produced events") {
  auto d = whist();
  std::string dummy = logic::fresh_name("u");
  SpecExpr comp = normalize_spec(d.bind(write_spec(1, d), dummy, write_spec(2, d)));
  CHECK(show_spec(comp) == "fun p h -> p ((), [Out 1; Out 2])");
}

TEST_CASE("wfr bind is whist bind with the history erased") {
  auto d = wfr();
  std::string dummy = logic::fresh_name("u");
  SpecExpr comp = normalize_spec(d.bind(write_spec(1, d), dummy, write_spec(2, d)));
  CHECK(show_spec(comp) == "fun p -> p ((), [Out 1; Out 2])");
}

TEST_CASE("monad laws and bind monotonicity for all ten descriptors") {
  DomainConfig dom = law_dom();
  auto descs = builtin_descriptors(Ty::integer(), Ty::boolean());
  REQUIRE(descs.size() == 10);
  for (const auto& d : descs) {
    CAPTURE(d.name);
    std::mt19937_64 rng(1000);
    for (int i = 0; i < 12; ++i) {
      Ty a = i % 2 ? Ty::integer() : Ty::boolean();
      Ty b = i % 3 ? Ty::integer() : Ty::unit();

      // left unit: bind (ret v) f == f[x := v]
      {
        testgen::TermGen tg{rng, {}};
        Term v = tg.gen(a, 1);
        std::string x = logic::fresh_name("x");
        SpecExpr f = testgen::random_spec(rng, d, b, 1, {{x, a}});
        SpecExpr lhs = d.bind(d.ret(v), x, f);
        SpecExpr rhs = f;
        for (auto& body : rhs.bodies) body = logic::subst_formula(body, x, v);
        CHECK(spec_equiv(lhs, rhs, dom));
      }

      // right unit: bind w ret == w
      {
        SpecExpr w = testgen::random_spec(rng, d, a, 1);
        std::string x = logic::fresh_name("x");
        SpecExpr rhs = d.bind(w, x, d.ret(Term::var(x, a)));
        CHECK(spec_equiv(rhs, w, dom));
      }

      // associativity
      {
        SpecExpr w = testgen::random_spec(rng, d, a, 1);
        std::string x = logic::fresh_name("x");
        SpecExpr f = testgen::random_spec(rng, d, b, 1, {{x, a}});
        std::string y = logic::fresh_name("y");
        SpecExpr g = testgen::random_spec(rng, d, Ty::integer(), 1, {{y, b}});
        SpecExpr lhs = d.bind(d.bind(w, x, f), y, g);
        SpecExpr rhs = d.bind(w, x, d.bind(f, y, g));
        CHECK(spec_equiv(lhs, rhs, dom));
      }
    }

    // bind monotonicity: weaken both sides; the composite stays ordered
    if (d.name != "prepost" && d.name != "pred" && d.name != "monsp") {
      for (int i = 0; i < 8; ++i) {
        Ty a = Ty::boolean();
        SpecExpr w1p = testgen::random_spec(rng, d, a, 0);
        SpecExpr w1 = w1p;
        SpecExpr extra = testgen::primitive_spec(rng, d, a, {});
        // align extra's binders onto w1's and disjoin: w1 <= w1p
        {
          Formula eb = extra.bodies[0];
          for (size_t j = 0; j < w1.posts.size(); ++j)
            eb = logic::rename_pred(eb, extra.posts[j], w1.posts[j]);
          std::map<std::string, Term> repl;
          for (size_t j = 0; j < w1.contexts.size(); ++j)
            repl.emplace(extra.contexts[j],
                         Term::var(w1.contexts[j], w1.shape.contexts[j].ty));
          if (!repl.empty()) eb = logic::subst_formula_many(eb, repl);
          w1.bodies[0] = Formula::disj(w1.bodies[0], eb);
        }
        REQUIRE(spec_leq_holds(d, w1, w1p, dom));
        std::string x = logic::fresh_name("x");
        SpecExpr f2p = testgen::random_spec(rng, d, Ty::integer(), 0, {{x, a}});
        SpecExpr f2 = f2p;
        {
          SpecExpr extra2 = testgen::primitive_spec(rng, d, Ty::integer(), {{x, a}});
          Formula eb = extra2.bodies[0];
          for (size_t j = 0; j < f2.posts.size(); ++j)
            eb = logic::rename_pred(eb, extra2.posts[j], f2.posts[j]);
          std::map<std::string, Term> repl;
          for (size_t j = 0; j < f2.contexts.size(); ++j)
            repl.emplace(extra2.contexts[j],
                         Term::var(f2.contexts[j], f2.shape.contexts[j].ty));
          if (!repl.empty()) eb = logic::subst_formula_many(eb, repl);
          f2.bodies[0] = Formula::disj(f2.bodies[0], eb);
        }
        SpecExpr lhs = d.bind(w1, x, f2);
        SpecExpr rhs = d.bind(w1p, x, f2p);
        CHECK(spec_leq_holds(d, lhs, rhs, dom));
      }
    }
  }
}

TEST_CASE("positivity implies semantic monotonicity") {
  std::mt19937_64 rng(77);
  DomainConfig dom = law_dom();
  auto d = wpure();
  for (int i = 0; i < 200; ++i) {
    SpecExpr w = testgen::random_spec(rng, d, Ty::integer(), 1);
    // collect the queried points of the single post variable, then check
    // w p1 ==> w p2 for every pointwise-related pair of tables
    Env scratch;
    std::set<std::vector<Value>> points;
    scratch.preds[w.posts[0]] =
        logic::PredTable{w.shape.posts[0].args,
                         [](const std::vector<Value>&) { return true; }};
    logic::EvalHooks hooks;
    hooks.collect = [&](const std::string& pv, const std::vector<Value>& args) {
      if (pv == w.posts[0]) points.insert(args);
    };
    logic::eval(w.bodies[0], scratch, dom, hooks);
    std::vector<std::vector<Value>> pts(points.begin(), points.end());
    size_t n = pts.size();
    REQUIRE(n <= 10);
    auto table = [&](uint64_t bits) {
      return logic::PredTable{w.shape.posts[0].args, [&pts, bits](const std::vector<Value>& a) {
                                for (size_t k = 0; k < pts.size(); ++k)
                                  if (pts[k] == a) return ((bits >> k) & 1) != 0;
                                return false;
                              }};
    };
    for (uint64_t lo = 0; lo < (uint64_t(1) << n); ++lo)
      for (uint64_t hi = lo;; hi = ((hi | lo) + 1) | lo) {
        if (hi >= (uint64_t(1) << n)) break;
        // lo subset of hi by construction
        Env e1;
        e1.preds[w.posts[0]] = table(lo);
        Env e2;
        e2.preds[w.posts[0]] = table(hi);
        bool v1 = logic::eval(w.bodies[0], e1, dom);
        bool v2 = logic::eval(w.bodies[0], e2, dom);
        CHECK((!v1 || v2));
        if (hi == ((uint64_t(1) << n) - 1)) break;
      }
  }
}

TEST_CASE("pred: sequencing singletons lands on the sum") {
  auto d = pred();
  DomainConfig dom = law_dom();
  std::string x = logic::fresh_name("x");
  // f = fun a -> y = a + 1  (as a pred over the bind binder)
  SpecExpr f;
  f.shape = d.shape_of(Ty::integer());
  f.results = {logic::fresh_name("y")};
  f.bodies = {Formula::eq(
      Term::var(f.results[0], Ty::integer()),
      Term::arith(Term::ArithOp::Add, Term::var(x, Ty::integer()), ilit(1)))};
  SpecExpr got = d.bind(d.ret(ilit(1)), x, f);
  SpecExpr expect;
  expect.shape = d.shape_of(Ty::integer());
  expect.results = {logic::fresh_name("y")};
  expect.bodies = {Formula::eq(Term::var(expect.results[0], Ty::integer()), ilit(2))};
  CHECK(spec_equiv(got, expect, dom));
}

TEST_CASE("prepost: bind requires the first postcondition to establish the next pre") {
  auto d = prepost();
  DomainConfig dom;
  dom.int_lo = 0;
  dom.int_hi = 3;
  // w = (true, a = 1), f a = (a <> 0, b = a)
  SpecExpr w = d.ret(ilit(1));
  std::string x = logic::fresh_name("x");
  SpecExpr f;
  f.shape = d.shape_of(Ty::integer());
  f.results = {logic::fresh_name("a")};
  f.bodies = {
      Formula::atom(Term::cmp(Term::CmpOp::Ne, Term::var(x, Ty::integer()), ilit(0))),
      Formula::eq(Term::var(f.results[0], Ty::integer()), Term::var(x, Ty::integer()))};
  SpecExpr got = d.bind(w, x, f);
  // the composed precondition evaluates to true over [0,3]
  Env env;
  CHECK(logic::eval(got.bodies[0], env, dom));
}

TEST_CASE("monsp: ret is the guarded singleton") {
  auto d = monsp();
  SpecExpr r = normalize_spec(d.ret(ilit(4)));
  CHECK(show_spec(r) == "fun pre a -> pre /\\ a = 4");
}

TEST_CASE("galois: prepost embeds into wpure preserving units") {
  DomainConfig dom = law_dom();
  auto pp = pair_of_spec(prepost().ret(ilit(2)));
  SpecExpr emb = galois_prepost_to_wpure(pp);
  CHECK(spec_equiv(emb, wpure().ret(ilit(2)), dom));
}

TEST_CASE("galois: wpure approximates to pre/post over a small carrier") {
  DomainConfig dom;
  dom.int_lo = 0;
  dom.int_hi = 4;
  dom.pred_cap = 8;
  // w = fun p -> p 3
  std::string p = logic::fresh_name("p");
  SpecExpr w;
  w.shape = wpure().shape_of(Ty::integer());
  w.posts = {p};
  w.bodies = {Formula::papply(p, {ilit(3)})};
  PrePostPair pp = wpure_to_prepost(w);
  Env env;
  CHECK(logic::eval(pp.pre, env, dom));
  for (int64_t v = 0; v <= 4; ++v) {
    Env e;
    e.bind(pp.result_var, Value::integer(v));
    CHECK(logic::eval(pp.post, e, dom) == (v == 3));
  }

  // w = fun p -> false has an unsatisfiable precondition
  SpecExpr wbot;
  wbot.shape = w.shape;
  wbot.posts = {logic::fresh_name("p")};
  wbot.bodies = {Formula::bot()};
  Env e2;
  CHECK(!logic::eval(wpure_to_prepost(wbot).pre, e2, dom));
}

TEST_CASE("galois adjunction between prepost and wpure") {
  std::mt19937_64 rng(909);
  DomainConfig dom = law_dom();
  dom.pred_cap = 8; // inner predicate quantifier over int carriers of size 3
  auto dpp = prepost();
  auto dw = wpure();
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    SpecExpr ppSpec = testgen::random_spec(rng, dpp, Ty::integer(), 1, {}, /*no_arith=*/true);
    SpecExpr w = testgen::random_spec(rng, dw, Ty::integer(), 1, {}, /*no_arith=*/true);
    PrePostPair pp = pair_of_spec(ppSpec);
    bool left = spec_leq_holds(dw, galois_prepost_to_wpure(pp), w, dom);
    bool right = spec_leq_holds(dpp, ppSpec, spec_of_pair(wpure_to_prepost(w)), dom);
    CHECK(left == right);
    agree += (left == right);

    // unit/counit inequalities
    CHECK(spec_leq_holds(dw, galois_prepost_to_wpure(wpure_to_prepost(w)), w, dom));
    CHECK(spec_leq_holds(dpp, ppSpec,
                         spec_of_pair(wpure_to_prepost(galois_prepost_to_wpure(pp))), dom));
  }
  CHECK(agree == 100);
}

TEST_CASE("galois between pred and prepost") {
  std::mt19937_64 rng(910);
  DomainConfig dom = law_dom();
  auto dp = pred();
  auto dpp = prepost();
  for (int i = 0; i < 50; ++i) {
    SpecExpr p = testgen::random_spec(rng, dp, Ty::integer(), 1);
    // round trip through the trivial precondition is exact
    SpecExpr back = galois_prepost_to_pred(galois_pred_to_prepost(p));
    CHECK(spec_equiv(p, back, dom));

    // adjunction: embed(p) <= pp iff p <= approx(pp)
    SpecExpr ppSpec = testgen::random_spec(rng, dpp, Ty::integer(), 1);
    PrePostPair pp = pair_of_spec(ppSpec);
    bool left = spec_leq_holds(dpp, spec_of_pair(galois_pred_to_prepost(p)), ppSpec, dom);
    bool right = spec_leq_holds(dp, p, galois_prepost_to_pred(pp), dom);
    CHECK(left == right);
  }
}

namespace {

// flat (p : A,S style) specs convert to the paired form the generic
// transformers produce
SpecExpr pair_form_state(const SpecExpr& flat, const SpecMonadDescriptor& paired, const Ty& a,
                         const Ty& s) {
  SpecExpr out;
  out.shape = paired.shape_of(a);
  std::string p = logic::fresh_name("p");
  out.posts = {p};
  out.contexts = {flat.contexts[0]};
  out.bodies = {logic::subst_pred_fn(flat.bodies[0], flat.posts[0],
                                     [&](const std::vector<Term>& args) {
                                       return Formula::papply(p, {Term::pair(args[0], args[1])});
                                     })};
  (void)s;
  return out;
}

SpecExpr sum_form_exc(const SpecExpr& flat, const SpecMonadDescriptor& paired, const Ty& a,
                      const Ty& e) {
  SpecExpr out;
  out.shape = paired.shape_of(a);
  std::string p = logic::fresh_name("p");
  out.posts = {p};
  Formula b = logic::subst_pred_fn(flat.bodies[0], flat.posts[0],
                                   [&](const std::vector<Term>& args) {
                                     return Formula::papply(
                                         p, {Term::inl(args[0], Ty::sum(a, e))});
                                   });
  b = logic::subst_pred_fn(b, flat.posts[1], [&](const std::vector<Term>& args) {
    return Formula::papply(p, {Term::inr(args[0], Ty::sum(a, e))});
  });
  out.bodies = {b};
  return out;
}

} // namespace

TEST_CASE("the state transformer over wpure is the state spec monad") {
  std::mt19937_64 rng(1234);
  DomainConfig dom = law_dom();
  Ty S = Ty::boolean();
  auto flat = wst(S);
  auto paired = apply_transformer(state_t(S), wpure());
  for (int i = 0; i < 100; ++i) {
    Ty a = i % 2 ? Ty::integer() : Ty::boolean();
    SpecExpr w = testgen::random_spec(rng, flat, Ty::boolean(), 0);
    std::string x = logic::fresh_name("x");
    SpecExpr f = testgen::random_spec(rng, flat, a, 0, {{x, Ty::boolean()}});
    SpecExpr flatBind = flat.bind(w, x, f);
    SpecExpr pairedBind =
        paired.bind(pair_form_state(w, paired, Ty::boolean(), S), x,
                    pair_form_state(f, paired, a, S));
    CHECK(spec_equiv(pair_form_state(flatBind, paired, a, S), pairedBind, dom));
  }
}

TEST_CASE("the exception transformer over wpure is the exception spec monad") {
  std::mt19937_64 rng(1235);
  DomainConfig dom = law_dom();
  Ty E = Ty::boolean();
  auto flat = wexc(E);
  auto paired = apply_transformer(exception_t(E), wpure());
  for (int i = 0; i < 100; ++i) {
    Ty a = i % 2 ? Ty::integer() : Ty::unit();
    SpecExpr w = testgen::random_spec(rng, flat, Ty::boolean(), 0);
    std::string x = logic::fresh_name("x");
    SpecExpr f = testgen::random_spec(rng, flat, a, 0, {{x, Ty::boolean()}});
    SpecExpr flatBind = flat.bind(w, x, f);
    SpecExpr pairedBind = paired.bind(sum_form_exc(w, paired, Ty::boolean(), E), x,
                                      sum_form_exc(f, paired, a, E));
    CHECK(spec_equiv(sum_form_exc(flatBind, paired, a, E), pairedBind, dom));
  }
}

TEST_CASE("stacking exceptions over state yields the combined shape") {
  Ty S = Ty::integer();
  Ty E = Ty::boolean();
  auto ml = apply_transformer(exception_t(E), apply_transformer(state_t(S), wpure()));
  SpecShape shape = ml.shape_of(Ty::integer());
  // ((A + E) x S -> prop) -> S -> prop
  REQUIRE(shape.posts.size() == 1);
  REQUIRE(shape.posts[0].args.size() == 1);
  CHECK(shape.posts[0].args[0] ==
        Ty::pair(Ty::sum(Ty::integer(), E), S));
  REQUIRE(shape.contexts.size() == 1);
  CHECK(shape.contexts[0].ty == S);
  // and the laws hold for the stacked descriptor
  std::mt19937_64 rng(4321);
  DomainConfig dom = law_dom();
  for (int i = 0; i < 20; ++i) {
    SpecExpr w = testgen::random_spec(rng, ml, Ty::boolean(), 0);
    std::string x = logic::fresh_name("x");
    SpecExpr f = testgen::random_spec(rng, ml, Ty::integer(), 0, {{x, Ty::boolean()}});
    SpecExpr viaRet = ml.bind(ml.ret(Term::lit_boolean(true)), x, f);
    SpecExpr direct = f;
    for (auto& b : direct.bodies)
      b = logic::subst_formula(b, x, Term::lit_boolean(true));
    CHECK(spec_equiv(viaRet, direct, dom));
    std::string y = logic::fresh_name("y");
    SpecExpr runit = ml.bind(w, y, ml.ret(Term::var(y, Ty::boolean())));
    CHECK(spec_equiv(runit, w, dom));
  }
}

TEST_CASE("the update transformer over wpure matches the history monad") {
  std::mt19937_64 rng(1236);
  DomainConfig dom = law_dom();
  dom.int_hi = 1; // events over [0,1]: list carriers stay tiny
  auto flat = whist();
  auto paired = apply_transformer(update_t(), wpure());
  Ty evl = Ty::list(Ty::event());
  auto to_paired = [&](const SpecExpr& w, const Ty& a) {
    SpecExpr out;
    out.shape = paired.shape_of(a);
    std::string p = logic::fresh_name("p");
    out.posts = {p};
    out.contexts = {w.contexts[0]};
    out.bodies = {logic::subst_pred_fn(
        w.bodies[0], w.posts[0], [&](const std::vector<Term>& args) {
          return Formula::papply(p, {Term::pair(args[0], args[1])});
        })};
    (void)evl;
    return out;
  };
  for (int i = 0; i < 60; ++i) {
    Ty a = i % 2 ? Ty::integer() : Ty::unit();
    SpecExpr w = testgen::random_spec(rng, flat, Ty::boolean(), 0);
    std::string x = logic::fresh_name("x");
    SpecExpr f = testgen::random_spec(rng, flat, a, 0, {{x, Ty::boolean()}});
    SpecExpr flatBind = flat.bind(w, x, f);
    SpecExpr pairedBind = paired.bind(to_paired(w, Ty::boolean()), x, to_paired(f, a));
    CHECK(spec_equiv(to_paired(flatBind, a), pairedBind, dom));
  }
}

TEST_CASE("join agrees with the bind route over a finite spec table") {
  std::mt19937_64 rng(5150);
  DomainConfig dom = law_dom();
  for (const auto& d : std::vector<SpecMonadDescriptor>{wpure(), wst(Ty::integer()), whist()}) {
    CAPTURE(d.name);
    for (int round = 0; round < 16; ++round) {
      // two inner int specs, indexed by a shared integer index variable
      std::string idx = logic::fresh_name("i");
      SpecExpr w1 = testgen::random_spec(rng, d, Ty::integer(), 0, {{idx, Ty::integer()}});
      SpecExpr w2 = testgen::random_spec(rng, d, Ty::integer(), 0, {{idx, Ty::integer()}});
      int h1 = register_spec_handle(idx, w1);
      int h2 = register_spec_handle(idx, w2);
      Term ht1 = make_spec_handle(h1, ilit(1), Ty::integer());
      Term ht2 = make_spec_handle(h2, ilit(2), Ty::integer());

      // a nested spec applying its post at the two spec leaves, and its twin
      // applying the post at integer tags instead
      SpecShape nshape = d.shape_of(spec_marker());
      SpecExpr nested, tagged;
      nested.shape = nshape;
      tagged.shape = d.shape_of(Ty::integer());
      std::string P = logic::fresh_name("p");
      nested.posts = tagged.posts = {P};
      std::vector<logic::Binder> ctxScope;
      for (const auto& c : nshape.contexts) {
        std::string n = logic::fresh_name(c.name);
        nested.contexts.push_back(n);
        tagged.contexts.push_back(n);
        ctxScope.push_back({n, c.ty});
      }
      testgen::TermGen tg{rng, ctxScope};
      auto site = [&](const Term& leaf, const Term& tag) {
        std::vector<Term> extrasN = {leaf}, extrasT = {tag};
        for (size_t j = 1; j < nshape.posts[0].args.size(); ++j) {
          Term t = tg.gen(nshape.posts[0].args[j], 1);
          extrasN.push_back(t);
          extrasT.push_back(t);
        }
        return std::make_pair(Formula::papply(P, extrasN), Formula::papply(P, extrasT));
      };
      auto [n1, t1] = site(ht1, ilit(1));
      auto [n2, t2] = site(ht2, ilit(2));
      Formula guard =
          Formula::eq(tg.gen(Ty::integer(), 1),
                      ilit(std::uniform_int_distribution<int>(0, 2)(rng)));
      nested.bodies = {Formula::conj(n1, Formula::impl(guard, n2))};
      tagged.bodies = {Formula::conj(t1, Formula::impl(guard, t2))};

      // lookup continuation: tag 1 continues as w1, tag 2 as w2
      std::string z = logic::fresh_name("z");
      SpecExpr lookup;
      lookup.shape = d.shape_of(Ty::integer());
      for (const auto& pd : lookup.shape.posts)
        lookup.posts.push_back(logic::fresh_name(pd.hint));
      for (const auto& cd : lookup.shape.contexts)
        lookup.contexts.push_back(logic::fresh_name(cd.name));
      auto align = [&](const SpecExpr& wi, int64_t tag) {
        Formula b = wi.bodies[0];
        for (size_t j = 0; j < wi.posts.size(); ++j)
          b = logic::rename_pred(b, wi.posts[j], lookup.posts[j]);
        std::map<std::string, Term> repl;
        for (size_t j = 0; j < wi.contexts.size(); ++j)
          repl.emplace(wi.contexts[j],
                       Term::var(lookup.contexts[j], lookup.shape.contexts[j].ty));
        repl.emplace(idx, ilit(tag));
        return logic::subst_formula_many(b, repl);
      };
      lookup.bodies = {Formula::conj(
          Formula::impl(Formula::eq(Term::var(z, Ty::integer()), ilit(1)), align(w1, 1)),
          Formula::impl(Formula::eq(Term::var(z, Ty::integer()), ilit(2)), align(w2, 2)))};
      SpecExpr viaBind = d.bind(tagged, z, lookup);
      SpecExpr viaJoin = d.join(nested);
      CHECK(spec_equiv(viaJoin, viaBind, dom));
    }
  }
}

TEST_CASE("join of a returned spec is that spec") {
  auto d = wpure();
  std::string p = logic::fresh_name("p");
  SpecExpr w;
  w.shape = d.shape_of(Ty::integer());
  w.posts = {p};
  w.bodies = {Formula::conj(Formula::papply(p, {ilit(1)}), Formula::papply(p, {ilit(2)}))};
  std::string idx = logic::fresh_name("i");
  int h = register_spec_handle(idx, w);
  SpecExpr nested = d.ret(make_spec_handle(h, Term::lit_unit(), Ty::unit()));
  SpecExpr joined = d.join(nested);
  DomainConfig dom = law_dom();
  CHECK(spec_equiv(joined, w, dom));
}

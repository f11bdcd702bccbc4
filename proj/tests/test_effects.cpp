#include <doctest.h>

#include "effects/runners.hpp"
#include "logic/eval.hpp"
#include "logic/errors.hpp"
#include "support/gen.hpp"

using namespace effver;
using namespace effver::effects;
using logic::Env;
using logic::Term;
using logic::Ty;
using logic::Value;

namespace {

Term ilit(int64_t v) { return Term::lit_integer(v); }

// let stmod f = bind get (fun x -> put (f x))
Comp stmod(const std::string& fname) {
  Ty fty = Ty::fn(Ty::integer(), Ty::integer());
  return Comp::call("get", Term::lit_unit(), "x",
                    Comp::call("put", Term::apply(fname, fty, Term::var("x", Ty::integer())),
                               "u", Comp::ret(Term::lit_unit())));
}

// duplicate = let x = input () in output x; output x
Comp duplicate() {
  Term x = Term::var("x", Ty::integer());
  return Comp::call(
      "read", Term::lit_unit(), "x",
      Comp::call("write", x, "u1", Comp::call("write", x, "u2", Comp::ret(Term::lit_unit()))));
}

// nondeterministically pick an element of a literal int list
Comp pickl(const std::vector<int64_t>& xs, size_t from = 0) {
  if (from == xs.size())
    return Comp::call("fail", Term::lit_unit(), "z", Comp::ret(ilit(0)));
  return Comp::call("choice", Term::lit_unit(), "b",
                    Comp::ite(Term::var("b", Ty::boolean()), Comp::ret(ilit(xs[from])),
                              pickl(xs, from + 1)));
}

// independent path enumerator for nondeterministic trees: walks every choice
// assignment, collecting reachable leaf values, skipping fail paths
void nd_paths(const Comp& m, Env& env, std::set<Value>& out) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      out.insert(logic::eval_term(m.ret_value(), env));
      return;
    case Comp::Kind::Call: {
      if (m.op() == "fail") return;
      for (bool b : {false, true}) {
        logic::Scoped scope(env, m.binder(), Value::boolean(b));
        nd_paths(m.cont(), env, out);
      }
      return;
    }
    case Comp::Kind::Ite: {
      bool c = logic::eval_term(m.cond(), env).as_bool();
      nd_paths(c ? m.then_branch() : m.else_branch(), env, out);
      return;
    }
    case Comp::Kind::Let: {
      logic::Scoped scope(env, m.binder(), logic::eval_term(m.bound(), env));
      nd_paths(m.body(), env, out);
      return;
    }
  }
}

} // namespace

TEST_CASE("ret examples") {
  Env env;
  Comp r = comp_ret(ilit(5));
  auto st = run_state(r, Value::integer(2), env);
  CHECK(st.value == Value::integer(5));
  CHECK(st.state == Value::integer(2));
  auto nd = run_nd(r, env);
  CHECK(nd == std::set<Value>{Value::integer(5)});
}

TEST_CASE("bind unit laws") {
  // bind(ret v, x, k) == k[x := v]
  Comp k = Comp::call("put", Term::var("x", Ty::integer()), "u", Comp::ret(Term::lit_unit()));
  Comp lhs = comp_bind(comp_ret(ilit(3)), "x", k);
  Comp expect = Comp::call("put", ilit(3), "u", Comp::ret(Term::lit_unit()));
  CHECK(lhs == expect);

  // bind(m, x, ret x) == m
  Comp m = Comp::call("get", Term::lit_unit(), "y", Comp::ret(Term::var("y", Ty::integer())));
  Comp rhs = comp_bind(m, "x", comp_ret(Term::var("x", Ty::integer())));
  CHECK(rhs == m);
}

TEST_CASE("bind associativity by runner equality on random state trees") {
  std::mt19937_64 rng(123);
  testgen::CompGen g{rng, sig_st(Ty::integer()), Ty::integer()};
  for (int i = 0; i < 200; ++i) {
    Comp m = g.gen(2);
    std::string x = logic::fresh_name("x");
    std::string y = logic::fresh_name("y");
    testgen::CompGen gf{rng, g.sig, Ty::integer()};
    Comp f = gf.gen(1, {{x, Ty::integer()}});
    Comp h = gf.gen(1, {{y, Ty::integer()}});
    Comp left = comp_bind(comp_bind(m, x, f), y, h);
    Comp right = comp_bind(m, x, comp_bind(f, y, h));
    for (int s = 0; s <= 2; ++s) {
      Env env;
      auto a = run_state(left, Value::integer(s), env);
      auto b = run_state(right, Value::integer(s), env);
      CHECK(a.value == b.value);
      CHECK(a.state == b.state);
    }
  }
}

TEST_CASE("state runner") {
  Env env;
  Comp get = Comp::call("get", Term::lit_unit(), "s", Comp::ret(Term::var("s", Ty::integer())));
  auto r1 = run_state(get, Value::integer(7), env);
  CHECK(r1.value == Value::integer(7));
  CHECK(r1.state == Value::integer(7));

  env.funs.emplace("f", logic::FnTable{Ty::fn(Ty::integer(), Ty::integer()),
                                       [](const Value& v) {
                                         return Value::integer(v.as_int() + 1);
                                       }});
  auto r2 = run_state(stmod("f"), Value::integer(4), env);
  CHECK(r2.value == Value::unit());
  CHECK(r2.state == Value::integer(5));

  Comp pg = Comp::call("put", ilit(9), "u", get);
  auto r3 = run_state(pg, Value::integer(0), env);
  CHECK(r3.value == Value::integer(9));
  CHECK(r3.state == Value::integer(9));
}

TEST_CASE("exception runner") {
  Env env;
  Ty exn = Ty::enumeration("exn", {{"div_by_zero_exn", {}}});
  CHECK(run_exc(comp_ret(ilit(1)), env).ok);

  Comp thrown = Comp::call("throw", Term::enum_ctor(exn, "div_by_zero_exn", {}), "z",
                           Comp::ret(ilit(1)));
  auto r = run_exc(thrown, env);
  CHECK(!r.ok);
  CHECK(r.value == Value::enum_ctor("div_by_zero_exn", {}));

  // div i j = if j = 0 then throw div_by_zero_exn else ret (i / j)
  auto div_prog = [&](int64_t i, int64_t j) {
    return Comp::ite(Term::cmp(Term::CmpOp::Eq, ilit(j), ilit(0)),
                     Comp::call("throw", Term::enum_ctor(exn, "div_by_zero_exn", {}), "z",
                                Comp::ret(ilit(0))),
                     Comp::ret(Term::arith(Term::ArithOp::Div, ilit(i), ilit(j))));
  };
  auto ok = run_exc(div_prog(4, 2), env);
  CHECK(ok.ok);
  CHECK(ok.value == Value::integer(2));
  CHECK(!run_exc(div_prog(1, 0), env).ok);
}

TEST_CASE("nondeterminism runner") {
  Env env;
  Comp choice =
      Comp::call("choice", Term::lit_unit(), "b", Comp::ret(Term::var("b", Ty::boolean())));
  CHECK(run_nd(choice, env) == std::set<Value>{Value::boolean(false), Value::boolean(true)});

  Comp fail = Comp::call("fail", Term::lit_unit(), "z", Comp::ret(Term::lit_boolean(false)));
  CHECK(run_nd(fail, env).empty());

  CHECK(run_nd(pickl({1, 2}), env) == std::set<Value>{Value::integer(1), Value::integer(2)});
}

TEST_CASE("nd runner agrees with an independent path enumerator") {
  std::mt19937_64 rng(77);
  testgen::CompGen g{rng, sig_nd(), Ty::integer()};
  for (int i = 0; i < 200; ++i) {
    Comp m = g.gen(3);
    Env env;
    std::set<Value> expect;
    nd_paths(m, env, expect);
    CHECK(run_nd(m, env) == expect);
  }
}

TEST_CASE("io runner") {
  Env env;
  auto r = run_io(duplicate(), {Value::integer(7)}, env);
  CHECK(r.value == Value::unit());
  REQUIRE(r.events.size() == 3);
  CHECK(r.events[0] == Value::enum_ctor("In", {Value::integer(7)}));
  CHECK(r.events[1] == Value::enum_ctor("Out", {Value::integer(7)}));
  CHECK(r.events[2] == Value::enum_ctor("Out", {Value::integer(7)}));

  auto r2 = run_io(comp_ret(ilit(3)), {}, env);
  CHECK(r2.value == Value::integer(3));
  CHECK(r2.events.empty());

  Comp ww = Comp::call("write", ilit(1), "u",
                       Comp::call("write", ilit(2), "v", Comp::ret(Term::lit_unit())));
  auto r3 = run_io(ww, {}, env);
  REQUIRE(r3.events.size() == 2);
  CHECK(r3.events[0] == Value::enum_ctor("Out", {Value::integer(1)}));
  CHECK(r3.events[1] == Value::enum_ctor("Out", {Value::integer(2)}));

  CHECK_THROWS_AS(run_io(duplicate(), {}, env), InputExhausted);
}

TEST_CASE("iost runner") {
  Env env;
  // do_io_then_rollback_state:
  //   let x = get () in let y = input () in put (x+y);
  //   let z = get () in output (z+1); put x
  Term x = Term::var("x", Ty::integer());
  Term y = Term::var("y", Ty::integer());
  Term z = Term::var("z", Ty::integer());
  Comp prog = Comp::call(
      "get", Term::lit_unit(), "x",
      Comp::call(
          "read", Term::lit_unit(), "y",
          Comp::call(
              "put", Term::arith(Term::ArithOp::Add, x, y), "u1",
              Comp::call("get", Term::lit_unit(), "z",
                         Comp::call("write", Term::arith(Term::ArithOp::Add, z, ilit(1)), "u2",
                                    Comp::call("put", x, "u3", Comp::ret(Term::lit_unit())))))));
  auto r = run_iost(prog, Value::integer(3), {Value::integer(4)}, env);
  CHECK(r.value == Value::unit());
  CHECK(r.state == Value::integer(3));
  REQUIRE(r.events.size() == 2);
  CHECK(r.events[0] == Value::enum_ctor("In", {Value::integer(4)}));
  CHECK(r.events[1] == Value::enum_ctor("Out", {Value::integer(8)}));

  auto r2 = run_iost(comp_ret(ilit(9)), Value::integer(5), {}, env);
  CHECK(r2.value == Value::integer(9));
  CHECK(r2.state == Value::integer(5));
  CHECK(r2.events.empty());

  Comp p3 = Comp::call("put", ilit(1), "u",
                       Comp::call("read", Term::lit_unit(), "i",
                                  Comp::call("get", Term::lit_unit(), "s",
                                             Comp::ret(Term::var("s", Ty::integer())))));
  auto r3 = run_iost(p3, Value::integer(0), {Value::integer(9)}, env);
  CHECK(r3.value == Value::integer(1));
  CHECK(r3.state == Value::integer(1));
  REQUIRE(r3.events.size() == 1);
  CHECK(r3.events[0] == Value::enum_ctor("In", {Value::integer(9)}));
}

TEST_CASE("generic effects convert to operations and back") {
  effects::OpDecl put{"put", Ty::integer(), Ty::unit()};
  Comp g = gen_of_op(put, ilit(5));
  REQUIRE(g.kind() == Comp::Kind::Call);
  CHECK(g.op() == "put");
  CHECK(g.cont().kind() == Comp::Kind::Ret);

  effects::OpDecl get{"get", Ty::unit(), Ty::integer()};
  Env env;
  auto r = run_state(gen_of_op(get, Term::lit_unit()), Value::integer(7), env);
  CHECK(r.value == Value::integer(7));
  CHECK(r.state == Value::integer(7));

  // choice as an operation with explicit continuation
  effects::OpDecl choice{"choice", Ty::unit(), Ty::boolean()};
  Comp viaGen = op_of_gen(choice, Term::lit_unit(), "b",
                          Comp::ret(Term::var("b", Ty::boolean())));
  Comp direct = Comp::call("choice", Term::lit_unit(), "b",
                           Comp::ret(Term::var("b", Ty::boolean())));
  CHECK(run_nd(viaGen, env) == run_nd(direct, env));
}

TEST_CASE("op_of_gen equals direct call under runners, random continuations") {
  std::mt19937_64 rng(4242);
  auto sig = sig_st(Ty::integer());
  for (int i = 0; i < 50; ++i) {
    const auto& op = sig.ops[size_t(std::uniform_int_distribution<int>(0, 1)(rng))];
    testgen::TermGen tg{rng, {}};
    Term arg = tg.gen(op.input, 1);
    std::string b = logic::fresh_name("b");
    testgen::CompGen g{rng, sig, Ty::integer()};
    Comp k = g.gen(2, {{b, op.output}});
    Comp lhs = op_of_gen(op, arg, b, k);
    Comp rhs = Comp::call(op.name, arg, b, k);
    for (int s = 0; s <= 2; ++s) {
      Env env;
      auto a = run_state(lhs, Value::integer(s), env);
      auto c = run_state(rhs, Value::integer(s), env);
      CHECK(a.value == c.value);
      CHECK(a.state == c.state);
    }
  }
}

TEST_CASE("coherence: bind grafts under operations") {
  // run(bind(call(op,i,x,m), f)) = run(call(op,i,x,bind(m,f)))
  std::mt19937_64 rng(55);
  auto sig = sig_st(Ty::integer());
  for (int i = 0; i < 50; ++i) {
    testgen::CompGen g{rng, sig, Ty::integer()};
    std::string x = logic::fresh_name("x");
    Comp m = g.gen(2, {{x, Ty::integer()}});
    std::string y = logic::fresh_name("y");
    Comp f = g.gen(2, {{y, Ty::integer()}});
    Comp callNode = Comp::call("get", Term::lit_unit(), x, m);
    Comp lhs = comp_bind(callNode, y, f);
    Comp rhs = Comp::call("get", Term::lit_unit(), x, comp_bind(m, y, f));
    CHECK(lhs == rhs);
    Env env;
    auto a = run_state(lhs, Value::integer(1), env);
    auto b = run_state(rhs, Value::integer(1), env);
    CHECK(a.value == b.value);
    CHECK(a.state == b.state);
  }
}

TEST_CASE("monad laws hold for every builtin signature at small depth") {
  std::mt19937_64 rng(9);
  // left unit, right unit on random trees, by runner equality per effect
  auto sig = sig_io();
  testgen::CompGen g{rng, sig, Ty::integer()};
  for (int i = 0; i < 100; ++i) {
    Comp m = g.gen(2);
    std::string x = logic::fresh_name("x");
    Comp viaBind = comp_bind(m, x, comp_ret(Term::var(x, Ty::integer())));
    std::vector<Value> input = {Value::integer(1), Value::integer(2), Value::integer(3),
                                Value::integer(0)};
    Env env;
    bool lhsExhausted = false, rhsExhausted = false;
    IOOutcome a{Value::unit(), {}}, b{Value::unit(), {}};
    try {
      a = run_io(m, input, env);
    } catch (const InputExhausted&) {
      lhsExhausted = true;
    }
    try {
      b = run_io(viaBind, input, env);
    } catch (const InputExhausted&) {
      rhsExhausted = true;
    }
    CHECK(lhsExhausted == rhsExhausted);
    if (!lhsExhausted) {
      CHECK(a.value == b.value);
      CHECK(a.events == b.events);
    }
  }
}

TEST_CASE("comp typecheck catches ill-typed trees") {
  auto sig = sig_st(Ty::integer());
  Comp bad = Comp::call("put", Term::lit_boolean(true), "u", Comp::ret(Term::lit_unit()));
  CHECK_THROWS_AS(comp_typecheck(bad, sig), TypeError);
  Comp good = Comp::call("put", ilit(1), "u", Comp::ret(Term::lit_unit()));
  CHECK(comp_typecheck(good, sig) == Ty::unit());
}

#include "effects/runners.hpp"

#include "logic/errors.hpp"
#include "logic/eval.hpp"

namespace effver::effects {

using logic::Env;
using logic::Scoped;
using logic::Value;

namespace {

Value ev(const logic::Term& t, Env& env) { return logic::eval_term(t, env); }

Value in_event(Value v) { return Value::enum_ctor("In", {std::move(v)}); }
Value out_event(Value v) { return Value::enum_ctor("Out", {std::move(v)}); }

} // namespace

StOutcome run_state(const Comp& m, const Value& s0, Env& env) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return {ev(m.ret_value(), env), s0};
    case Comp::Kind::Call: {
      if (m.op() == "get") {
        Scoped scope(env, m.binder(), s0);
        return run_state(m.cont(), s0, env);
      }
      if (m.op() == "put") {
        Value s1 = ev(m.arg(), env);
        Scoped scope(env, m.binder(), Value::unit());
        return run_state(m.cont(), s1, env);
      }
      throw UnhandledOp("state runner: " + m.op());
    }
    case Comp::Kind::Ite:
      return ev(m.cond(), env).as_bool() ? run_state(m.then_branch(), s0, env)
                                         : run_state(m.else_branch(), s0, env);
    case Comp::Kind::Let: {
      Scoped scope(env, m.binder(), ev(m.bound(), env));
      return run_state(m.body(), s0, env);
    }
  }
  throw UnhandledOp("state runner");
}

ExcOutcome run_exc(const Comp& m, Env& env) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return {true, ev(m.ret_value(), env)};
    case Comp::Kind::Call: {
      if (m.op() == "throw") return {false, ev(m.arg(), env)};
      throw UnhandledOp("exception runner: " + m.op());
    }
    case Comp::Kind::Ite:
      return ev(m.cond(), env).as_bool() ? run_exc(m.then_branch(), env)
                                         : run_exc(m.else_branch(), env);
    case Comp::Kind::Let: {
      Scoped scope(env, m.binder(), ev(m.bound(), env));
      return run_exc(m.body(), env);
    }
  }
  throw UnhandledOp("exception runner");
}

std::set<Value> run_nd(const Comp& m, Env& env) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return {ev(m.ret_value(), env)};
    case Comp::Kind::Call: {
      if (m.op() == "choice") {
        std::set<Value> out;
        for (bool b : {false, true}) {
          Scoped scope(env, m.binder(), Value::boolean(b));
          auto sub = run_nd(m.cont(), env);
          out.insert(sub.begin(), sub.end());
        }
        return out;
      }
      if (m.op() == "fail") return {};
      throw UnhandledOp("nondeterminism runner: " + m.op());
    }
    case Comp::Kind::Ite:
      return ev(m.cond(), env).as_bool() ? run_nd(m.then_branch(), env)
                                         : run_nd(m.else_branch(), env);
    case Comp::Kind::Let: {
      Scoped scope(env, m.binder(), ev(m.bound(), env));
      return run_nd(m.body(), env);
    }
  }
  throw UnhandledOp("nondeterminism runner");
}

namespace {

IOOutcome run_io_at(const Comp& m, const std::vector<Value>& input, size_t& pos, Env& env) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return {ev(m.ret_value(), env), {}};
    case Comp::Kind::Call: {
      if (m.op() == "read") {
        if (pos >= input.size()) throw InputExhausted("input stream exhausted");
        Value i = input[pos++];
        Scoped scope(env, m.binder(), i);
        IOOutcome rest = run_io_at(m.cont(), input, pos, env);
        rest.events.insert(rest.events.begin(), in_event(i));
        return rest;
      }
      if (m.op() == "write") {
        Value o = ev(m.arg(), env);
        Scoped scope(env, m.binder(), Value::unit());
        IOOutcome rest = run_io_at(m.cont(), input, pos, env);
        rest.events.insert(rest.events.begin(), out_event(o));
        return rest;
      }
      throw UnhandledOp("io runner: " + m.op());
    }
    case Comp::Kind::Ite:
      return ev(m.cond(), env).as_bool() ? run_io_at(m.then_branch(), input, pos, env)
                                         : run_io_at(m.else_branch(), input, pos, env);
    case Comp::Kind::Let: {
      Scoped scope(env, m.binder(), ev(m.bound(), env));
      return run_io_at(m.body(), input, pos, env);
    }
  }
  throw UnhandledOp("io runner");
}

IOStOutcome run_iost_at(const Comp& m, Value s, const std::vector<Value>& input, size_t& pos,
                        Env& env) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return {ev(m.ret_value(), env), s, {}};
    case Comp::Kind::Call: {
      if (m.op() == "get") {
        Scoped scope(env, m.binder(), s);
        return run_iost_at(m.cont(), s, input, pos, env);
      }
      if (m.op() == "put") {
        Value s1 = ev(m.arg(), env);
        Scoped scope(env, m.binder(), Value::unit());
        return run_iost_at(m.cont(), s1, input, pos, env);
      }
      if (m.op() == "read") {
        if (pos >= input.size()) throw InputExhausted("input stream exhausted");
        Value i = input[pos++];
        Scoped scope(env, m.binder(), i);
        IOStOutcome rest = run_iost_at(m.cont(), s, input, pos, env);
        rest.events.insert(rest.events.begin(), in_event(i));
        return rest;
      }
      if (m.op() == "write") {
        Value o = ev(m.arg(), env);
        Scoped scope(env, m.binder(), Value::unit());
        IOStOutcome rest = run_iost_at(m.cont(), s, input, pos, env);
        rest.events.insert(rest.events.begin(), out_event(o));
        return rest;
      }
      throw UnhandledOp("iost runner: " + m.op());
    }
    case Comp::Kind::Ite:
      return ev(m.cond(), env).as_bool() ? run_iost_at(m.then_branch(), s, input, pos, env)
                                         : run_iost_at(m.else_branch(), s, input, pos, env);
    case Comp::Kind::Let: {
      Scoped scope(env, m.binder(), ev(m.bound(), env));
      return run_iost_at(m.body(), s, input, pos, env);
    }
  }
  throw UnhandledOp("iost runner");
}

} // namespace

IOOutcome run_io(const Comp& m, const std::vector<Value>& input, Env& env) {
  size_t pos = 0;
  return run_io_at(m, input, pos, env);
}

IOStOutcome run_iost(const Comp& m, const Value& s0, const std::vector<Value>& input, Env& env) {
  size_t pos = 0;
  return run_iost_at(m, s0, input, pos, env);
}

Value run_pure(const Comp& m, Env& env) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return ev(m.ret_value(), env);
    case Comp::Kind::Call:
      throw UnhandledOp("pure runner: " + m.op());
    case Comp::Kind::Ite:
      return ev(m.cond(), env).as_bool() ? run_pure(m.then_branch(), env)
                                         : run_pure(m.else_branch(), env);
    case Comp::Kind::Let: {
      Scoped scope(env, m.binder(), ev(m.bound(), env));
      return run_pure(m.body(), env);
    }
  }
  throw UnhandledOp("pure runner");
}

} // namespace effver::effects

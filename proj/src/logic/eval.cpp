#include "logic/eval.hpp"

#include "logic/errors.hpp"

namespace effver::logic {

namespace {

int64_t safe_div(int64_t a, int64_t b) { return b == 0 ? 0 : a / b; }
int64_t safe_mod(int64_t a, int64_t b) { return b == 0 ? 0 : a % b; }

bool value_elem(const Value& x, const Value& l) {
  for (const auto& v : l.items())
    if (v == x) return true;
  return false;
}

struct Evaluator {
  Env& env;
  const DomainConfig& dom;
  const EvalHooks* hooks = nullptr;

  Value term(const Term& t) {
    using K = Term::Kind;
    switch (t.kind()) {
      case K::Var: {
        const Value* v = env.lookup(t.var_name());
        if (!v) throw UnboundVariable("unbound variable " + t.var_name());
        return *v;
      }
      case K::LitUnit: return Value::unit();
      case K::LitBool: return Value::boolean(t.lit_bool());
      case K::LitInt: return Value::integer(t.lit_int());
      case K::Pair: return Value::pair(term(t.child(0)), term(t.child(1)));
      case K::Proj: {
        Value p = term(t.child(0));
        return t.proj_index() == 1 ? p.fst() : p.snd();
      }
      case K::Inl: return Value::inl(term(t.child(0)));
      case K::Inr: return Value::inr(term(t.child(0)));
      case K::CaseSum: {
        Value s = term(t.child(0));
        if (s.is_left()) {
          Scoped scope(env, t.case_left_var(), s.sum_payload());
          return term(t.child(1));
        }
        Scoped scope(env, t.case_right_var(), s.sum_payload());
        return term(t.child(2));
      }
      case K::ListLit: {
        std::vector<Value> items;
        items.reserve(t.arity());
        for (size_t i = 0; i < t.arity(); ++i) items.push_back(term(t.child(i)));
        return Value::list(std::move(items));
      }
      case K::Cons: {
        Value h = term(t.child(0));
        Value tl = term(t.child(1));
        std::vector<Value> items;
        items.reserve(tl.items().size() + 1);
        items.push_back(std::move(h));
        for (const auto& v : tl.items()) items.push_back(v);
        return Value::list(std::move(items));
      }
      case K::Append: {
        Value a = term(t.child(0));
        Value b = term(t.child(1));
        std::vector<Value> items = a.items();
        for (const auto& v : b.items()) items.push_back(v);
        return Value::list(std::move(items));
      }
      case K::Elem: {
        Value x = term(t.child(0));
        Value l = term(t.child(1));
        return Value::boolean(value_elem(x, l));
      }
      case K::EnumCtor: {
        std::vector<Value> args;
        args.reserve(t.arity());
        for (size_t i = 0; i < t.arity(); ++i) args.push_back(term(t.child(i)));
        return Value::enum_ctor(t.ctor_name(), std::move(args));
      }
      case K::Arith: {
        int64_t a = term(t.child(0)).as_int();
        int64_t b = term(t.child(1)).as_int();
        switch (t.arith_op()) {
          case Term::ArithOp::Add: return Value::integer(a + b);
          case Term::ArithOp::Sub: return Value::integer(a - b);
          case Term::ArithOp::Mul: return Value::integer(a * b);
          case Term::ArithOp::Div: return Value::integer(safe_div(a, b));
          case Term::ArithOp::Mod: return Value::integer(safe_mod(a, b));
        }
        break;
      }
      case K::Cmp: {
        Value a = term(t.child(0));
        Value b = term(t.child(1));
        switch (t.cmp_op()) {
          case Term::CmpOp::Eq: return Value::boolean(a == b);
          case Term::CmpOp::Ne: return Value::boolean(!(a == b));
          case Term::CmpOp::Lt: return Value::boolean(a.as_int() < b.as_int());
          case Term::CmpOp::Le: return Value::boolean(a.as_int() <= b.as_int());
        }
        break;
      }
      case K::BoolOp: {
        if (t.bool_op() == Term::BoolK::Not) return Value::boolean(!term(t.child(0)).as_bool());
        bool a = term(t.child(0)).as_bool();
        bool b = term(t.child(1)).as_bool();
        return Value::boolean(t.bool_op() == Term::BoolK::And ? (a && b) : (a || b));
      }
      case K::Ite:
        return term(t.child(0)).as_bool() ? term(t.child(1)) : term(t.child(2));
      case K::Apply: {
        auto it = env.funs.find(t.fn_name());
        if (it == env.funs.end())
          throw UnboundVariable("no table for uninterpreted function " + t.fn_name());
        return it->second.fn(term(t.child(0)));
      }
    }
    throw UnboundVariable("unreachable term kind");
  }

  bool formula(const Formula& f) {
    using K = Formula::Kind;
    const bool nosc = hooks && hooks->collect;
    switch (f.kind()) {
      case K::Top: return true;
      case K::Bot: return false;
      case K::And: {
        bool a = formula(f.child(0));
        if (!a && !nosc) return false;
        bool b = formula(f.child(1));
        return a && b;
      }
      case K::Or: {
        bool a = formula(f.child(0));
        if (a && !nosc) return true;
        bool b = formula(f.child(1));
        return a || b;
      }
      case K::Imp: {
        bool a = formula(f.child(0));
        if (!a && !nosc) return true;
        bool b = formula(f.child(1));
        return !a || b;
      }
      case K::Not: return !formula(f.child(0));
      case K::TermAtom: return term(f.term(0)).as_bool();
      case K::Eq: return term(f.term(0)) == term(f.term(1));
      case K::Forall: {
        const auto& c = carrier(f.qty(), dom);
        bool ok = true;
        for (const auto& v : c) {
          Scoped scope(env, f.qvar(), v);
          if (!formula(f.child(0))) {
            ok = false;
            if (!nosc) return false;
          }
        }
        return ok;
      }
      case K::Exists: {
        const auto& c = carrier(f.qty(), dom);
        bool ok = false;
        for (const auto& v : c) {
          Scoped scope(env, f.qvar(), v);
          if (formula(f.child(0))) {
            ok = true;
            if (!nosc) return true;
          }
        }
        return ok;
      }
      case K::PApply: {
        auto it = env.preds.find(f.pvar());
        if (it == env.preds.end())
          throw UnboundVariable("no table for predicate variable " + f.pvar());
        std::vector<Value> args;
        args.reserve(f.terms().size());
        for (const auto& t : f.terms()) args.push_back(term(t));
        if (hooks && hooks->collect) hooks->collect(f.pvar(), args);
        return it->second.fn(args);
      }
      case K::PLamRedex: {
        for (size_t i = 0; i < f.binders().size(); ++i)
          env.bind(f.binders()[i].name, term(f.terms()[i]));
        bool r = formula(f.child(0));
        for (size_t i = 0; i < f.binders().size(); ++i) env.unbind();
        return r;
      }
      case K::PForall: {
        // Enumerate all tables over the product carrier of the argument types.
        size_t domain = 1;
        for (const auto& ty : f.pforall_args()) domain *= carrier_size(ty, dom);
        if (domain > dom.pred_cap || domain >= 32)
          throw CarrierTooLarge("predicate table domain " + std::to_string(domain) +
                                " exceeds cap " + std::to_string(dom.pred_cap));
        std::vector<std::vector<Value>> tuples;
        tuples.push_back({});
        for (const auto& ty : f.pforall_args()) {
          const auto& c = carrier(ty, dom);
          std::vector<std::vector<Value>> next;
          for (const auto& prefix : tuples)
            for (const auto& v : c) {
              auto t = prefix;
              t.push_back(v);
              next.push_back(std::move(t));
            }
          tuples = std::move(next);
        }
        const size_t n = tuples.size();
        // Tables are total over the carrier; applications at values outside
        // it (reachable through arithmetic) are false.
        auto index_of = [tuples](const std::vector<Value>& args) -> std::optional<size_t> {
          for (size_t i = 0; i < tuples.size(); ++i)
            if (tuples[i] == args) return i;
          return std::nullopt;
        };
        bool ok = true;
        for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
          PredTable table;
          table.arg_tys = f.pforall_args();
          table.fn = [bits, index_of](const std::vector<Value>& args) {
            auto i = index_of(args);
            return i.has_value() && ((bits >> *i) & 1);
          };
          auto saved = env.preds.find(f.pvar()) != env.preds.end()
                           ? std::optional<PredTable>(env.preds[f.pvar()])
                           : std::nullopt;
          env.preds[f.pvar()] = table;
          bool r = formula(f.child(0));
          if (saved)
            env.preds[f.pvar()] = *saved;
          else
            env.preds.erase(f.pvar());
          if (!r) {
            ok = false;
            if (!nosc) return false;
          }
        }
        return ok;
      }
    }
    return false;
  }
};

} // namespace

Value eval_term(const Term& t, Env& env) {
  DomainConfig dom;
  Evaluator e{env, dom, nullptr};
  return e.term(t);
}

bool eval(const Formula& f, Env& env, const DomainConfig& dom) {
  Evaluator e{env, dom, nullptr};
  return e.formula(f);
}

bool eval(const Formula& f, Env& env, const DomainConfig& dom, const EvalHooks& hooks) {
  Evaluator e{env, dom, &hooks};
  return e.formula(f);
}

} // namespace effver::logic

#include "specmonads/extensional.hpp"

#include <set>

#include "logic/errors.hpp"
#include "logic/fresh.hpp"
#include "logic/eval.hpp"
#include "logic/pretty.hpp"
#include "logic/subst.hpp"

namespace effver::specm {

using logic::DomainConfig;
using logic::Env;
using logic::Formula;
using logic::PredSig;
using logic::Term;
using logic::Ty;
using logic::Value;

namespace {

struct Queries {
  // per predicate variable, the orders set of queried tuples
  std::map<std::string, std::set<std::vector<Value>>> points;

  size_t total() const {
    size_t n = 0;
    for (const auto& [k, v] : points) n += v.size();
    return n;
  }
};

// Evaluates f with all-true tables, recording every predicate application.
void collect_queries(const Formula& f, const PredSig& preds, Env& env,
                     const DomainConfig& dom, Queries& out) {
  Env scratch = env;
  for (const auto& [name, tys] : preds)
    scratch.preds[name] = logic::PredTable{tys, [](const std::vector<Value>&) { return true; }};
  logic::EvalHooks hooks;
  hooks.collect = [&](const std::string& pvar, const std::vector<Value>& args) {
    if (preds.count(pvar)) out.points[pvar].insert(args);
  };
  logic::eval(f, scratch, dom, hooks);
}

// Enumerates truth assignments over the queried points, calling body(env)
// with tables installed; stops early when body returns false.
bool for_all_point_tables(const Queries& q, const PredSig& preds, Env& env,
                          const std::function<bool(Env&)>& body) {
  std::vector<std::pair<std::string, std::vector<Value>>> flat;
  for (const auto& [pvar, pts] : q.points)
    for (const auto& pt : pts) flat.emplace_back(pvar, pt);
  size_t n = flat.size();
  if (n > 22) throw CarrierTooLarge("too many distinct predicate queries: " + std::to_string(n));
  for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
    Env e = env;
    for (const auto& [pvar, tys] : preds) {
      // table: true exactly on queried points whose bit is set
      std::vector<std::pair<std::vector<Value>, bool>> table;
      for (size_t i = 0; i < n; ++i)
        if (flat[i].first == pvar) table.emplace_back(flat[i].second, (bits >> i) & 1);
      e.preds[pvar] = logic::PredTable{
          tys, [table](const std::vector<Value>& args) {
            for (const auto& [pt, b] : table)
              if (pt == args) return b;
            return false;
          }};
    }
    if (!body(e)) return false;
  }
  return true;
}

// Enumerates environments for a list of typed binders over their carriers.
bool for_all_envs(const std::vector<logic::Binder>& binders, const DomainConfig& dom, Env& env,
                  const std::function<bool(Env&)>& body, size_t idx = 0) {
  if (idx == binders.size()) return body(env);
  for (const auto& v : logic::carrier(binders[idx].ty, dom)) {
    logic::Scoped scope(env, binders[idx].name, v);
    if (!for_all_envs(binders, dom, env, body, idx + 1)) return false;
  }
  return true;
}

} // namespace

std::optional<Counterexample> spec_equiv_witness(const SpecExpr& a, const SpecExpr& b,
                                                 const DomainConfig& dom, Env env) {
  if (!a.shape.compatible(b.shape) || !(a.shape.result == b.shape.result))
    return Counterexample{"shapes differ: " + a.shape.show() + " vs " + b.shape.show()};

  // Unify binder names: rename b's onto a's.
  std::vector<Formula> bs = b.bodies;
  for (auto& body : bs) {
    for (size_t i = 0; i < a.posts.size(); ++i)
      body = logic::rename_pred(body, b.posts[i], a.posts[i]);
    std::map<std::string, Term> repl;
    for (size_t i = 0; i < a.contexts.size(); ++i)
      repl.emplace(b.contexts[i], Term::var(a.contexts[i], a.shape.contexts[i].ty));
    for (size_t i = 0; i < a.results.size(); ++i)
      repl.emplace(b.results[i], Term::var(a.results[i], a.shape.results[i].ty));
    if (!repl.empty()) body = logic::subst_formula_many(body, repl);
  }

  PredSig preds;
  for (size_t i = 0; i < a.posts.size(); ++i) preds[a.posts[i]] = a.shape.posts[i].args;

  std::vector<logic::Binder> binders;
  for (size_t i = 0; i < a.contexts.size(); ++i)
    binders.push_back({a.contexts[i], a.shape.contexts[i].ty});
  for (size_t i = 0; i < a.results.size(); ++i)
    binders.push_back({a.results[i], a.shape.results[i].ty});

  std::optional<Counterexample> cex;
  for_all_envs(binders, dom, env, [&](Env& e) {
    for (size_t c = 0; c < a.bodies.size(); ++c) {
      Queries q;
      collect_queries(a.bodies[c], preds, e, dom, q);
      collect_queries(bs[c], preds, e, dom, q);
      bool ok = for_all_point_tables(q, preds, e, [&](Env& e2) {
        bool va = logic::eval(a.bodies[c], e2, dom);
        bool vb = logic::eval(bs[c], e2, dom);
        if (va != vb) {
          std::string envs;
          for (const auto& [n, v] : e2.bindings())
            envs += " " + logic::display_base(n) + "=" + v.show();
          cex = Counterexample{"bodies disagree (" + std::to_string(va) + " vs " +
                               std::to_string(vb) + ") at" + envs};
          return false;
        }
        return true;
      });
      if (!ok) return false;
    }
    return true;
  });
  return cex;
}

bool spec_equiv(const SpecExpr& a, const SpecExpr& b, const DomainConfig& dom, Env env) {
  return !spec_equiv_witness(a, b, dom, std::move(env)).has_value();
}

std::optional<Counterexample> valid_witness(const Formula& f, const PredSig& preds,
                                            const DomainConfig& dom, Env env) {
  // free term variables enumerate over their... obligations are closed, so
  // only predicate tables remain.
  Queries q;
  collect_queries(f, preds, env, dom, q);
  std::optional<Counterexample> cex;
  for_all_point_tables(q, preds, env, [&](Env& e) {
    if (!logic::eval(f, e, dom)) {
      cex = Counterexample{"formula falsified under some table"};
      return false;
    }
    return true;
  });
  return cex;
}

bool valid_for_all_tables(const Formula& f, const PredSig& preds, const DomainConfig& dom,
                          Env env) {
  return !valid_witness(f, preds, dom, std::move(env)).has_value();
}

bool spec_leq_holds(const SpecMonadDescriptor& d, const SpecExpr& a, const SpecExpr& b,
                    const DomainConfig& dom, Env env) {
  if (a.shape.components == 2) {
    // pre/post pairs have no predicate variables; the order formula is
    // directly evaluable
    return valid_for_all_tables(d.leq(a, b), {}, dom, std::move(env));
  }
  // Pointwise order checked per context/result assignment; enumerating the
  // environment outside the table enumeration keeps query sets small.
  SpecExpr b2 = b;
  std::vector<Formula> bs = b2.bodies;
  for (auto& body : bs) {
    for (size_t i = 0; i < a.posts.size(); ++i)
      body = logic::rename_pred(body, b.posts[i], a.posts[i]);
    std::map<std::string, Term> repl;
    for (size_t i = 0; i < a.contexts.size(); ++i)
      repl.emplace(b.contexts[i], Term::var(a.contexts[i], a.shape.contexts[i].ty));
    for (size_t i = 0; i < a.results.size(); ++i)
      repl.emplace(b.results[i], Term::var(a.results[i], a.shape.results[i].ty));
    if (!repl.empty()) body = logic::subst_formula_many(body, repl);
  }
  PredSig preds;
  for (size_t i = 0; i < a.posts.size(); ++i) preds[a.posts[i]] = a.shape.posts[i].args;
  std::vector<logic::Binder> binders;
  for (size_t i = 0; i < a.contexts.size(); ++i)
    binders.push_back({a.contexts[i], a.shape.contexts[i].ty});
  for (size_t i = 0; i < a.results.size(); ++i)
    binders.push_back({a.results[i], a.shape.results[i].ty});
  bool backward = a.shape.backward;
  bool ok = true;
  for_all_envs(binders, dom, env, [&](Env& e) {
    Queries q;
    collect_queries(a.bodies[0], preds, e, dom, q);
    collect_queries(bs[0], preds, e, dom, q);
    return for_all_point_tables(q, preds, e, [&](Env& e2) {
      bool va = logic::eval(a.bodies[0], e2, dom);
      bool vb = logic::eval(bs[0], e2, dom);
      bool holds = backward ? (!vb || va) : (!va || vb);
      if (!holds) {
        ok = false;
        return false;
      }
      return true;
    });
  });
  return ok;
}

} // namespace effver::specm

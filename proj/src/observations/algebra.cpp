#include "observations/algebra.hpp"

#include <random>

#include "effects/runners.hpp"
#include "logic/errors.hpp"
#include "logic/eval.hpp"
#include "logic/fresh.hpp"
#include "logic/subst.hpp"
#include "specmonads/descriptors.hpp"
#include "specmonads/extensional.hpp"

namespace effver::obs {

using effects::Comp;
using logic::Formula;
using logic::fresh_name;
using logic::Term;
using logic::Ty;

Formula fold_algebra(const AlgebraRule& alg, const Comp& m,
                     const std::function<Formula(const Term&)>& leaf) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return leaf(m.ret_value());
    case Comp::Kind::Call: {
      auto it = alg.prop_ops.find(m.op());
      if (it == alg.prop_ops.end()) throw UnhandledOp("algebra lacks " + m.op());
      return it->second(m.arg(), [&](const Term& out) {
        return fold_algebra(alg, effects::comp_subst(m.cont(), m.binder(), out), leaf);
      });
    }
    case Comp::Kind::Ite: {
      Formula c = Formula::atom(m.cond());
      return Formula::conj(Formula::impl(c, fold_algebra(alg, m.then_branch(), leaf)),
                           Formula::impl(Formula::neg(c),
                                         fold_algebra(alg, m.else_branch(), leaf)));
    }
    case Comp::Kind::Let:
      return fold_algebra(alg, effects::comp_subst(m.body(), m.binder(), m.bound()), leaf);
  }
  return Formula::top();
}

Formula fold_algebra_state(const AlgebraRule& alg, const Comp& m,
                           const std::function<Formula(const Term&, const Term&)>& leaf,
                           const Term& state) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return leaf(m.ret_value(), state);
    case Comp::Kind::Call: {
      auto it = alg.state_ops.find(m.op());
      if (it == alg.state_ops.end()) throw UnhandledOp("algebra lacks " + m.op());
      return it->second(
          m.arg(),
          [&](const Term& out, const Term& st) {
            return fold_algebra_state(alg, effects::comp_subst(m.cont(), m.binder(), out),
                                      leaf, st);
          },
          state);
    }
    case Comp::Kind::Ite: {
      Formula c = Formula::atom(m.cond());
      return Formula::conj(
          Formula::impl(c, fold_algebra_state(alg, m.then_branch(), leaf, state)),
          Formula::impl(Formula::neg(c),
                        fold_algebra_state(alg, m.else_branch(), leaf, state)));
    }
    case Comp::Kind::Let:
      return fold_algebra_state(
          alg, effects::comp_subst(m.body(), m.binder(), m.bound()), leaf, state);
  }
  return Formula::top();
}

namespace {

// Small deterministic tree pool over the signature for the law check. All
// trees return ints so one predicate arity covers every leaf.
std::vector<Comp> law_trees(const effects::Signature& sig, int depth) {
  std::vector<Comp> out;
  out.push_back(Comp::ret(Term::lit_integer(0)));
  out.push_back(Comp::ret(Term::lit_integer(1)));
  if (depth <= 0) return out;
  auto subs = law_trees(sig, depth - 1);
  for (const auto& op : sig.ops) {
    Term arg = op.input == Ty::unit() ? Term::lit_unit() : Term::lit_integer(1);
    if (op.output.is_empty_enum()) {
      out.push_back(Comp::call(op.name, arg, fresh_name("z"), Comp::ret(Term::lit_integer(0))));
      continue;
    }
    for (const auto& k : subs) {
      out.push_back(Comp::call(op.name, arg, fresh_name("o"), k));
    }
    if (op.output == Ty::integer()) {
      std::string b = fresh_name("o");
      out.push_back(Comp::call(
          op.name, arg, b,
          Comp::ret(Term::arith(Term::ArithOp::Add, Term::var(b, op.output),
                                Term::lit_integer(1)))));
    }
  }
  return out;
}

} // namespace

namespace {

// Trees with equal computational denotations must fold to extensionally
// equal formulas; this is what separates genuine algebras from arbitrary
// interpretations of the operation nodes.
void check_factoring(const AlgebraRule& alg, const std::vector<Comp>& trees,
                     const logic::DomainConfig& dom) {
  std::string pi = fresh_name("p");
  logic::PredSig sig;
  sig[pi] = alg.stateful ? std::vector<Ty>{Ty::integer(), alg.state}
                         : std::vector<Ty>{Ty::integer()};
  auto folded = [&](const Comp& m) {
    if (!alg.stateful)
      return fold_algebra(alg, m,
                          [&](const Term& v) { return Formula::papply(pi, {v}); });
    std::string s0 = fresh_name("s");
    return Formula::forall(
        s0, alg.state,
        fold_algebra_state(alg, m,
                           [&](const Term& v, const Term& st) {
                             return Formula::papply(pi, {v, st});
                           },
                           Term::var(s0, alg.state)));
  };
  std::map<std::string, size_t> seen;
  logic::Env env;
  for (size_t i = 0; i < trees.size(); ++i) {
    std::string key;
    if (alg.sig.name == "nd") {
      for (const auto& v : effects::run_nd(trees[i], env)) key += v.show() + ";";
    } else if (alg.sig.name == "st") {
      for (const auto& s0 : logic::carrier(alg.state, dom)) {
        auto r = effects::run_state(trees[i], s0, env);
        key += r.value.show() + "/" + r.state.show() + ";";
      }
    } else {
      return;
    }
    auto [it, fresh_entry] = seen.emplace(key, i);
    if (fresh_entry) continue;
    Formula a = folded(trees[it->second]);
    Formula b = folded(trees[i]);
    Formula iff = Formula::conj(Formula::impl(a, b), Formula::impl(b, a));
    if (!specm::valid_for_all_tables(iff, sig, dom))
      throw AlgebraLawViolation("algebra " + alg.name +
                                " distinguishes computationally equal trees");
  }
}

} // namespace

Observation from_algebra(const AlgebraRule& alg, const logic::DomainConfig& dom,
                         int law_depth) {
  check_factoring(alg, law_trees(alg.sig, law_depth), dom);
  // Bind compatibility: folding a grafted tree equals folding the prefix
  // with leaves interpreted by the folded suffix.
  auto trees = law_trees(alg.sig, law_depth - 1);
  std::string pi = fresh_name("p");
  for (const auto& m : trees) {
    for (const auto& f : trees) {
      std::string x = fresh_name("x");
      Comp bound = effects::comp_bind(m, x, f);
      auto leaf_pi = [&](const Term& v) { return Formula::papply(pi, {v}); };
      auto leaf_state_pi = [&](const Term& v, const Term& st) {
        return Formula::papply(pi, {v, st});
      };
      Formula lhs = Formula::top();
      Formula rhs = Formula::top();
      if (!alg.stateful) {
        lhs = fold_algebra(alg, bound, leaf_pi);
        rhs = fold_algebra(alg, m, [&](const Term& v) {
          return fold_algebra(alg, effects::comp_subst(f, x, v), leaf_pi);
        });
      } else {
        Term s0 = Term::var(fresh_name("s"), alg.state);
        lhs = Formula::forall(s0.var_name(), alg.state,
                              fold_algebra_state(alg, bound, leaf_state_pi, s0));
        rhs = Formula::forall(s0.var_name(), alg.state,
                              fold_algebra_state(alg, m,
                                                 [&](const Term& v, const Term& st) {
                                                   return fold_algebra_state(
                                                       alg,
                                                       effects::comp_subst(f, x, v),
                                                       leaf_state_pi, st);
                                                 },
                                                 s0));
      }
      logic::PredSig sig;
      sig[pi] = alg.stateful ? std::vector<Ty>{Ty::integer(), alg.state}
                             : std::vector<Ty>{Ty::integer()};
      Formula iff = Formula::conj(Formula::impl(lhs, rhs), Formula::impl(rhs, lhs));
      if (!specm::valid_for_all_tables(iff, sig, dom))
        throw AlgebraLawViolation("algebra " + alg.name +
                                  " does not respect sequencing on a tree of depth " +
                                  std::to_string(law_depth));
    }
  }

  Observation o;
  o.name = "alg(" + alg.name + ")";
  o.sig = alg.sig;
  if (!alg.stateful) {
    o.target = specm::wpure();
    auto d = o.target;
    for (const auto& op : alg.sig.ops) {
      auto rule = alg.prop_ops.at(op.name);
      Ty outTy = op.output;
      o.op_specs[op.name] = [d, rule, outTy](const Term& input) {
        specm::SpecShape shape = d.shape_of(outTy);
        specm::SpecExpr w;
        w.shape = shape;
        w.posts = {fresh_name("p")};
        w.bodies = {rule(input, [&](const Term& out) {
          return Formula::papply(w.posts[0], {out});
        })};
        specm::check_spec(w);
        return w;
      };
    }
  } else {
    o.target = specm::wst(alg.state);
    auto d = o.target;
    for (const auto& op : alg.sig.ops) {
      auto rule = alg.state_ops.at(op.name);
      Ty outTy = op.output;
      o.op_specs[op.name] = [d, rule, outTy](const Term& input) {
        specm::SpecShape shape = d.shape_of(outTy);
        specm::SpecExpr w;
        w.shape = shape;
        w.posts = {fresh_name("p")};
        w.contexts = {fresh_name("s0")};
        Term s0 = Term::var(w.contexts[0], shape.contexts[0].ty);
        w.bodies = {rule(
            input,
            [&](const Term& out, const Term& st) {
              return Formula::papply(w.posts[0], {out, st});
            },
            s0)};
        specm::check_spec(w);
        return w;
      };
    }
  }
  return o;
}

AlgebraRule alpha_forall() {
  AlgebraRule a;
  a.name = "forall";
  a.sig = effects::sig_nd();
  a.prop_ops["choice"] = [](const Term&, const auto& k) {
    return Formula::conj(k(Term::lit_boolean(true)), k(Term::lit_boolean(false)));
  };
  a.prop_ops["fail"] = [](const Term&, const auto&) { return Formula::top(); };
  return a;
}

AlgebraRule alpha_exists() {
  AlgebraRule a;
  a.name = "exists";
  a.sig = effects::sig_nd();
  a.prop_ops["choice"] = [](const Term&, const auto& k) {
    return Formula::disj(k(Term::lit_boolean(true)), k(Term::lit_boolean(false)));
  };
  a.prop_ops["fail"] = [](const Term&, const auto&) { return Formula::bot(); };
  return a;
}

AlgebraRule alpha_state(const Ty& s) {
  AlgebraRule a;
  a.name = "state";
  a.sig = effects::sig_st(s);
  a.stateful = true;
  a.state = s;
  a.state_ops["get"] = [](const Term&, const auto& k, const Term& st) {
    return k(st, st);
  };
  a.state_ops["put"] = [](const Term& input, const auto& k, const Term&) {
    return k(Term::lit_unit(), input);
  };
  return a;
}

} // namespace effver::obs

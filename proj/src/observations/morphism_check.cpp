#include "observations/morphism_check.hpp"

#include "logic/errors.hpp"
#include "logic/fresh.hpp"
#include "logic/pretty.hpp"
#include "logic/subst.hpp"
#include "specmonads/extensional.hpp"
#include "specmonads/spec_handle.hpp"
#include "effects/runners.hpp"
#include "vcgen/wp.hpp"

namespace effver::obs {

using effects::Comp;
using logic::Formula;
using logic::fresh_name;
using logic::Term;
using logic::Ty;
using specm::SpecExpr;

namespace {

// Deterministic tree enumeration: returns and operation chains, with int
// results throughout so value terms compose. Conditionals are covered by the
// randomized suites; here the structure under test is the homomorphic
// extension through operations.
void enum_trees(const Observation& o, int depth, const std::vector<logic::Binder>& scope,
                std::vector<Comp>& out) {
  std::vector<Term> leaves = {Term::lit_integer(0), Term::lit_integer(1),
                              Term::lit_integer(2)};
  for (const auto& b : scope)
    if (b.ty == Ty::integer()) leaves.push_back(Term::var(b.name, b.ty));
  for (const auto& t : leaves) out.push_back(Comp::ret(t));
  if (depth <= 0) return;
  std::vector<Comp> subs;
  enum_trees(o, depth - 1, scope, subs);
  for (const auto& op : o.sig.ops) {
    std::vector<Term> args;
    if (op.input == Ty::unit()) {
      args = {Term::lit_unit()};
    } else if (op.input == Ty::integer()) {
      args = {Term::lit_integer(1)};
      for (const auto& b : scope)
        if (b.ty == Ty::integer()) args.push_back(Term::var(b.name, b.ty));
    } else {
      continue;
    }
    for (const auto& arg : args) {
      if (op.output.is_empty_enum()) {
        out.push_back(Comp::call(op.name, arg, fresh_name("z"),
                                 Comp::ret(Term::lit_integer(0))));
        continue;
      }
      for (const auto& k : subs) out.push_back(Comp::call(op.name, arg, fresh_name("o"), k));
      if (op.output == Ty::integer()) {
        std::string b = fresh_name("o");
        std::vector<Comp> inner;
        enum_trees(o, 0, {{b, op.output}}, inner);
        for (const auto& k : inner)
          out.push_back(Comp::call(op.name, arg, b, k));
      }
    }
  }
}

} // namespace

namespace {

// Serializes the computational denotation of a tree for the builtin
// signatures, so the factoring of the observation through the computational
// monad's equations becomes checkable: equal denotations must get
// extensionally equal specs.
std::optional<std::string> denotation_key(const Comp& m, const effects::Signature& sig,
                                          const logic::DomainConfig& dom) {
  using logic::Value;
  std::string key;
  logic::Env env;
  if (sig.name == "pure") {
    return effects::run_pure(m, env).show();
  }
  if (sig.name == "st") {
    for (const auto& s0 : logic::carrier(*sig.state, dom)) {
      auto r = effects::run_state(m, s0, env);
      key += r.value.show() + "/" + r.state.show() + ";";
    }
    return key;
  }
  if (sig.name == "exc") {
    auto r = effects::run_exc(m, env);
    return (r.ok ? "inl " : "inr ") + r.value.show();
  }
  if (sig.name == "nd") {
    for (const auto& v : effects::run_nd(m, env)) key += v.show() + ";";
    return key;
  }
  if (sig.name == "io" || sig.name == "iost") {
    const auto& alphabet = logic::carrier(*sig.input, dom);
    std::vector<std::vector<Value>> streams = {{}};
    for (int len = 0; len < 3; ++len) {
      std::vector<std::vector<Value>> next;
      for (const auto& s : streams)
        for (const auto& a : alphabet) {
          auto t = s;
          t.push_back(a);
          next.push_back(std::move(t));
        }
      streams = std::move(next);
    }
    if (sig.name == "io") {
      for (const auto& in : streams) {
        auto r = effects::run_io(m, in, env);
        key += r.value.show() + "/" + Value::list(r.events).show() + ";";
      }
      return key;
    }
    for (const auto& s0 : logic::carrier(*sig.state, dom)) {
      for (const auto& in : streams) {
        auto r = effects::run_iost(m, s0, in, env);
        key += r.value.show() + "/" + r.state.show() + "/" +
               Value::list(r.events).show() + ";";
      }
    }
    return key;
  }
  return std::nullopt; // free signature: no equations to respect
}

} // namespace

MorphismReport check_morphism_laws(const Observation& o, const logic::DomainConfig& dom,
                                   int depth) {
  MorphismReport report;

  // ret equation
  for (const Term& v : {Term::lit_integer(0), Term::lit_integer(1), Term::lit_integer(2)}) {
    SpecExpr lhs = vcgen::wp(Comp::ret(v), o).spec;
    SpecExpr rhs = o.target.ret(v);
    ++report.ret_checked;
    if (auto cex = specm::spec_equiv_witness(lhs, rhs, dom)) {
      report.ok = false;
      report.counterexample =
          "ret law fails at " + logic::show_term(v) + ": " + cex->description;
      return report;
    }
  }

  // bind equation on enumerated trees and continuation families
  std::vector<Comp> ms;
  enum_trees(o, depth - 1, {}, ms);
  std::string x = fresh_name("x");
  std::vector<Comp> fs;
  enum_trees(o, depth > 1 ? 1 : 0, {{x, Ty::integer()}}, fs);
  for (const auto& m : ms) {
    for (const auto& f : fs) {
      ++report.bind_checked;
      Comp bound = effects::comp_bind(m, x, f);
      SpecExpr lhs = vcgen::wp(bound, o).spec;
      SpecExpr rhs = o.target.bind(vcgen::wp(m, o).spec, x, vcgen::wp(f, o).spec);
      if (auto cex = specm::spec_equiv_witness(lhs, rhs, dom)) {
        report.ok = false;
        report.counterexample = "bind law fails: " + cex->description;
        return report;
      }
    }
  }

  // factoring through the computational monad: trees with one denotation
  // carry one spec
  std::vector<Comp> all;
  enum_trees(o, depth, {}, all);
  std::map<std::string, size_t> seen;
  for (size_t i = 0; i < all.size(); ++i) {
    auto key = denotation_key(all[i], o.sig, dom);
    if (!key) break;
    auto [it, fresh_entry] = seen.emplace(*key, i);
    if (fresh_entry) continue;
    SpecExpr a = vcgen::wp(all[it->second], o).spec;
    SpecExpr b = vcgen::wp(all[i], o).spec;
    if (auto cex = specm::spec_equiv_witness(a, b, dom)) {
      report.ok = false;
      report.counterexample =
          "computationally equal trees get different specs: " + cex->description;
      return report;
    }
  }
  return report;
}

SpecExpr lift_op_direct(const Observation& o, const std::string& op, const Term& input,
                        const std::string& out_var, const SpecExpr& cont) {
  return specm::normalize_spec(o.rule(op, input, out_var, cont));
}

SpecExpr lift_op_join(const Observation& o, const std::string& op, const Term& input,
                      const std::string& out_var, const SpecExpr& cont) {
  const effects::OpDecl* decl = o.sig.find(op);
  if (!decl) throw UnhandledOp("operation " + op + " not in signature " + o.sig.name);
  int handle = specm::register_spec_handle(out_var, cont);
  // the tree op<i, fun o -> ret (w o)> with the spec carried as a leaf
  Comp tree = Comp::call(
      op, input, out_var,
      Comp::ret(specm::make_spec_handle(handle, Term::var(out_var, decl->output),
                                        decl->output)));
  SpecExpr nested = vcgen::wp(tree, o).spec;
  SpecExpr joined = o.target.join(nested);
  // operations with unreachable continuations leave no application sites;
  // the element type is the continuation's either way
  joined.shape = o.target.shape_of(cont.shape.result);
  return specm::normalize_spec(joined);
}

} // namespace effver::obs

#pragma once

// Randomized generators shared by the property tests. Seeds are fixed by
// each test for reproducibility.

#include <random>

#include "effects/comp.hpp"
#include "effects/signature.hpp"
#include "logic/fresh.hpp"

namespace effver::testgen {

using effects::Comp;
using effects::OpDecl;
using effects::Signature;
using logic::Term;
using logic::Ty;

inline Term default_term(const Ty& ty) {
  using K = Ty::Kind;
  switch (ty.kind()) {
    case K::Unit: return Term::lit_unit();
    case K::Bool: return Term::lit_boolean(false);
    case K::Int: return Term::lit_integer(0);
    case K::Pair: return Term::pair(default_term(ty.fst()), default_term(ty.snd()));
    case K::Sum: return Term::inl(default_term(ty.left()), ty);
    case K::List: return Term::list_lit(ty.elem(), {});
    case K::Enum: {
      for (const auto& c : ty.ctors()) {
        std::vector<Term> args;
        for (const auto& a : c.args) args.push_back(default_term(a));
        return Term::enum_ctor(ty, c.name, std::move(args));
      }
      // No constructor: uninhabited. Callers avoid this case.
      return Term::lit_unit();
    }
    case K::Fn: return Term::lit_unit();
  }
  return Term::lit_unit();
}

struct TermGen {
  std::mt19937_64& rng;
  // in-scope variables with their types
  std::vector<logic::Binder> scope;
  // restrict int terms to small literals and variables
  bool no_arith = false;

  int irand(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Term gen(const Ty& ty, int depth = 2) {
    using K = Ty::Kind;
    // use a variable of the right type half the time
    std::vector<const logic::Binder*> candidates;
    for (const auto& b : scope)
      if (b.ty == ty) candidates.push_back(&b);
    if (!candidates.empty() && irand(0, 1) == 0)
      return Term::var(candidates[size_t(irand(0, int(candidates.size()) - 1))]->name, ty);
    switch (ty.kind()) {
      case K::Int: {
        if (no_arith) return Term::lit_integer(irand(0, 2));
        if (depth > 0 && irand(0, 2) == 0)
          return Term::arith(irand(0, 1) ? Term::ArithOp::Add : Term::ArithOp::Mul,
                             gen(Ty::integer(), depth - 1), gen(Ty::integer(), depth - 1));
        return Term::lit_integer(irand(0, 2));
      }
      case K::Bool: {
        if (depth > 0 && irand(0, 2) == 0)
          return Term::cmp(irand(0, 1) ? Term::CmpOp::Le : Term::CmpOp::Eq,
                           gen(Ty::integer(), depth - 1), gen(Ty::integer(), depth - 1));
        return Term::lit_boolean(irand(0, 1));
      }
      case K::Pair:
        return Term::pair(gen(ty.fst(), depth - 1), gen(ty.snd(), depth - 1));
      case K::List: {
        int n = depth > 0 ? irand(0, 2) : 0;
        std::vector<Term> items;
        for (int i = 0; i < n; ++i) items.push_back(gen(ty.elem(), depth - 1));
        return Term::list_lit(ty.elem(), std::move(items));
      }
      case K::Sum:
        return irand(0, 1) ? Term::inl(gen(ty.left(), depth - 1), ty)
                           : Term::inr(gen(ty.right(), depth - 1), ty);
      case K::Enum: {
        if (ty.ctors().empty()) return default_term(ty);
        const auto& c = ty.ctors()[size_t(irand(0, int(ty.ctors().size()) - 1))];
        std::vector<Term> args;
        for (const auto& a : c.args) args.push_back(gen(a, depth - 1));
        return Term::enum_ctor(ty, c.name, std::move(args));
      }
      default:
        return default_term(ty);
    }
  }
};

struct CompGen {
  std::mt19937_64& rng;
  Signature sig;
  Ty result;

  int irand(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Comp gen(int depth, std::vector<logic::Binder> scope = {}) {
    TermGen tg{rng, scope};
    if (depth <= 0 || sig.ops.empty() || irand(0, 3) == 0)
      return Comp::ret(tg.gen(result, 1));
    int k = irand(0, int(sig.ops.size()) + 1);
    if (k < int(sig.ops.size())) {
      const OpDecl& op = sig.ops[size_t(k)];
      Term arg = tg.gen(op.input, 1);
      std::string binder = logic::fresh_name("r");
      if (op.output.is_empty_enum()) {
        // continuation unreachable; keep it well-typed
        return Comp::call(op.name, arg, binder, Comp::ret(default_term(result)));
      }
      auto inner = scope;
      inner.push_back({binder, op.output});
      return Comp::call(op.name, arg, binder, gen(depth - 1, inner));
    }
    if (k == int(sig.ops.size())) {
      Term c = tg.gen(Ty::boolean(), 1);
      return Comp::ite(c, gen(depth - 1, scope), gen(depth - 1, scope));
    }
    std::string binder = logic::fresh_name("v");
    Term bound = tg.gen(Ty::integer(), 1);
    auto inner = scope;
    inner.push_back({binder, Ty::integer()});
    return Comp::let_pure(binder, bound, gen(depth - 1, inner));
  }
};

} // namespace effver::testgen

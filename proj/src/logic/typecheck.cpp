#include "logic/typecheck.hpp"

#include "logic/errors.hpp"

namespace effver::logic {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& expected,
                       const std::string& found) {
  throw TypeError("type error in " + where + ": expected " + expected + ", found " + found);
}

void expect(const Ty& want, const Ty& got, const std::string& where) {
  if (!(want == got)) fail(where, want.show(), got.show());
}

} // namespace

Ty typecheck(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Var: return t.var_ty();
    case K::LitUnit: return Ty::unit();
    case K::LitBool: return Ty::boolean();
    case K::LitInt: return Ty::integer();
    case K::Pair: return Ty::pair(typecheck(t.child(0)), typecheck(t.child(1)));
    case K::Proj: {
      Ty inner = typecheck(t.child(0));
      if (inner.kind() != Ty::Kind::Pair) fail("proj", "pair type", inner.show());
      return t.proj_index() == 1 ? inner.fst() : inner.snd();
    }
    case K::Inl: {
      const Ty& s = t.ann_ty();
      if (s.kind() != Ty::Kind::Sum) fail("inl", "sum type annotation", s.show());
      expect(s.left(), typecheck(t.child(0)), "inl");
      return s;
    }
    case K::Inr: {
      const Ty& s = t.ann_ty();
      if (s.kind() != Ty::Kind::Sum) fail("inr", "sum type annotation", s.show());
      expect(s.right(), typecheck(t.child(0)), "inr");
      return s;
    }
    case K::CaseSum: {
      Ty scrut = typecheck(t.child(0));
      if (scrut.kind() != Ty::Kind::Sum) fail("case", "sum type", scrut.show());
      Ty l = typecheck(t.child(1));
      Ty r = typecheck(t.child(2));
      expect(l, r, "case branches");
      return l;
    }
    case K::ListLit: {
      for (size_t i = 0; i < t.arity(); ++i)
        expect(t.ann_ty(), typecheck(t.child(i)), "list literal");
      return Ty::list(t.ann_ty());
    }
    case K::Cons: {
      Ty h = typecheck(t.child(0));
      Ty tail = typecheck(t.child(1));
      expect(Ty::list(h), tail, "cons");
      return tail;
    }
    case K::Append: {
      Ty a = typecheck(t.child(0));
      Ty b = typecheck(t.child(1));
      if (a.kind() != Ty::Kind::List) fail("append", "list type", a.show());
      expect(a, b, "append");
      return a;
    }
    case K::Elem: {
      Ty x = typecheck(t.child(0));
      Ty l = typecheck(t.child(1));
      expect(Ty::list(x), l, "elem");
      return Ty::boolean();
    }
    case K::EnumCtor: {
      const Ty& e = t.ann_ty();
      if (e.kind() != Ty::Kind::Enum) fail("constructor", "enum type", e.show());
      const auto* c = e.find_ctor(t.ctor_name());
      if (!c) fail("constructor", "constructor of " + e.show(), t.ctor_name());
      if (c->args.size() != t.arity())
        fail("constructor " + t.ctor_name(), std::to_string(c->args.size()) + " arguments",
             std::to_string(t.arity()));
      for (size_t i = 0; i < t.arity(); ++i)
        expect(c->args[i], typecheck(t.child(i)), "constructor " + t.ctor_name());
      return e;
    }
    case K::Arith: {
      expect(Ty::integer(), typecheck(t.child(0)), "arithmetic");
      expect(Ty::integer(), typecheck(t.child(1)), "arithmetic");
      return Ty::integer();
    }
    case K::Cmp: {
      Ty a = typecheck(t.child(0));
      Ty b = typecheck(t.child(1));
      expect(a, b, "comparison");
      if (t.cmp_op() == Term::CmpOp::Lt || t.cmp_op() == Term::CmpOp::Le)
        expect(Ty::integer(), a, "ordering comparison");
      if (a.kind() == Ty::Kind::Fn) fail("comparison", "equality type", a.show());
      return Ty::boolean();
    }
    case K::BoolOp: {
      expect(Ty::boolean(), typecheck(t.child(0)), "boolean operation");
      if (t.arity() > 1) expect(Ty::boolean(), typecheck(t.child(1)), "boolean operation");
      return Ty::boolean();
    }
    case K::Ite: {
      expect(Ty::boolean(), typecheck(t.child(0)), "if condition");
      Ty a = typecheck(t.child(1));
      Ty b = typecheck(t.child(2));
      expect(a, b, "if branches");
      return a;
    }
    case K::Apply: {
      const Ty& f = t.ann_ty();
      if (f.kind() != Ty::Kind::Fn) fail("apply", "function type", f.show());
      expect(f.dom(), typecheck(t.child(0)), "apply " + t.fn_name());
      return f.cod();
    }
  }
  throw TypeError("unreachable term kind");
}

void check_formula(const Formula& f, const PredSig& sig) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top:
    case K::Bot:
      return;
    case K::And:
    case K::Or:
    case K::Imp:
      check_formula(f.child(0), sig);
      check_formula(f.child(1), sig);
      return;
    case K::Not:
      check_formula(f.child(0), sig);
      return;
    case K::TermAtom: {
      Ty t = typecheck(f.term(0));
      if (!(t == Ty::boolean()))
        throw TypeError("formula atom must be boolean, found " + t.show());
      return;
    }
    case K::Eq: {
      Ty a = typecheck(f.term(0));
      Ty b = typecheck(f.term(1));
      if (!(a == b))
        throw TypeError("equation relates " + a.show() + " and " + b.show());
      return;
    }
    case K::Forall:
    case K::Exists:
      check_formula(f.child(0), sig);
      return;
    case K::PApply: {
      auto it = sig.find(f.pvar());
      if (it == sig.end())
        throw TypeError("unknown predicate variable " + f.pvar());
      if (it->second.size() != f.terms().size())
        throw TypeError("predicate " + f.pvar() + " applied to " +
                        std::to_string(f.terms().size()) + " arguments, expects " +
                        std::to_string(it->second.size()));
      for (size_t i = 0; i < f.terms().size(); ++i) {
        Ty a = typecheck(f.terms()[i]);
        if (!(a == it->second[i]))
          throw TypeError("predicate " + f.pvar() + " argument " + std::to_string(i) +
                          ": expected " + it->second[i].show() + ", found " + a.show());
      }
      return;
    }
    case K::PLamRedex: {
      if (f.binders().size() != f.terms().size())
        throw TypeError("predicate redex arity mismatch");
      for (size_t i = 0; i < f.terms().size(); ++i) {
        Ty a = typecheck(f.terms()[i]);
        if (!(a == f.binders()[i].ty))
          throw TypeError("predicate redex argument " + std::to_string(i) + ": expected " +
                          f.binders()[i].ty.show() + ", found " + a.show());
      }
      check_formula(f.child(0), sig);
      return;
    }
    case K::PForall: {
      PredSig extended = sig;
      extended[f.pvar()] = f.pforall_args();
      check_formula(f.child(0), extended);
      return;
    }
  }
}

} // namespace effver::logic

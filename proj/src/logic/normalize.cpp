#include "logic/normalize.hpp"

#include <map>

#include "logic/subst.hpp"
#include "logic/typecheck.hpp"

namespace effver::logic {

namespace {

bool is_lit(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::LitUnit:
    case K::LitBool:
    case K::LitInt:
      return true;
    case K::Pair:
      return is_lit(t.child(0)) && is_lit(t.child(1));
    case K::Inl:
    case K::Inr:
      return is_lit(t.child(0));
    case K::ListLit:
    case K::EnumCtor: {
      for (size_t i = 0; i < t.arity(); ++i)
        if (!is_lit(t.child(i))) return false;
      return true;
    }
    default:
      return false;
  }
}

Term mk_bool(bool b) { return Term::lit_boolean(b); }

// Structural equality decision on normalized terms: definite answers only
// for literal-vs-literal or syntactically identical sides.
enum class Tri { True, False, Unknown };

Tri term_eq_tri(const Term& a, const Term& b) {
  using K = Term::Kind;
  if (a == b) return Tri::True;
  if (a.kind() == K::EnumCtor && b.kind() == K::EnumCtor) {
    if (a.ctor_name() != b.ctor_name()) return Tri::False;
    Tri all = Tri::True;
    for (size_t i = 0; i < a.arity(); ++i) {
      Tri c = term_eq_tri(a.child(i), b.child(i));
      if (c == Tri::False) return Tri::False;
      if (c == Tri::Unknown) all = Tri::Unknown;
    }
    return all;
  }
  if (a.kind() == K::Pair && b.kind() == K::Pair) {
    Tri f = term_eq_tri(a.child(0), b.child(0));
    Tri s = term_eq_tri(a.child(1), b.child(1));
    if (f == Tri::False || s == Tri::False) return Tri::False;
    if (f == Tri::True && s == Tri::True) return Tri::True;
    return Tri::Unknown;
  }
  if ((a.kind() == K::Inl && b.kind() == K::Inr) || (a.kind() == K::Inr && b.kind() == K::Inl))
    return Tri::False;
  if ((a.kind() == K::Inl && b.kind() == K::Inl) || (a.kind() == K::Inr && b.kind() == K::Inr))
    return term_eq_tri(a.child(0), b.child(0));
  if (a.kind() == K::ListLit && b.kind() == K::ListLit) {
    if (a.arity() != b.arity()) return Tri::False;
    Tri all = Tri::True;
    for (size_t i = 0; i < a.arity(); ++i) {
      Tri c = term_eq_tri(a.child(i), b.child(i));
      if (c == Tri::False) return Tri::False;
      if (c == Tri::Unknown) all = Tri::Unknown;
    }
    return all;
  }
  if (is_lit(a) && is_lit(b)) return Tri::False; // distinct literals
  return Tri::Unknown;
}

Term norm_t(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Var:
    case K::LitUnit:
    case K::LitBool:
    case K::LitInt:
      return t;
    case K::Pair: return Term::pair(norm_t(t.child(0)), norm_t(t.child(1)));
    case K::Proj: {
      Term inner = norm_t(t.child(0));
      if (inner.kind() == K::Pair) return t.proj_index() == 1 ? inner.child(0) : inner.child(1);
      return Term::proj(t.proj_index(), inner);
    }
    case K::Inl: return Term::inl(norm_t(t.child(0)), t.ann_ty());
    case K::Inr: return Term::inr(norm_t(t.child(0)), t.ann_ty());
    case K::CaseSum: {
      Term scrut = norm_t(t.child(0));
      if (scrut.kind() == K::Inl)
        return norm_t(subst_term(t.child(1), t.case_left_var(), scrut.child(0)));
      if (scrut.kind() == K::Inr)
        return norm_t(subst_term(t.child(2), t.case_right_var(), scrut.child(0)));
      return Term::case_sum(scrut, t.case_left_var(), norm_t(t.child(1)), t.case_right_var(),
                            norm_t(t.child(2)));
    }
    case K::ListLit: {
      std::vector<Term> items;
      items.reserve(t.arity());
      for (size_t i = 0; i < t.arity(); ++i) items.push_back(norm_t(t.child(i)));
      return Term::list_lit(t.ann_ty(), std::move(items));
    }
    case K::Cons: {
      Term h = norm_t(t.child(0));
      Term tl = norm_t(t.child(1));
      if (tl.kind() == K::ListLit) {
        std::vector<Term> items;
        items.reserve(tl.arity() + 1);
        items.push_back(h);
        for (size_t i = 0; i < tl.arity(); ++i) items.push_back(tl.child(i));
        return Term::list_lit(tl.ann_ty(), std::move(items));
      }
      return Term::cons(h, tl);
    }
    case K::Append: {
      Term a = norm_t(t.child(0));
      Term b = norm_t(t.child(1));
      if (a.kind() == K::ListLit && a.arity() == 0) return b;
      if (b.kind() == K::ListLit && b.arity() == 0) return a;
      if (a.kind() == K::ListLit && b.kind() == K::ListLit) {
        std::vector<Term> items;
        items.reserve(a.arity() + b.arity());
        for (size_t i = 0; i < a.arity(); ++i) items.push_back(a.child(i));
        for (size_t i = 0; i < b.arity(); ++i) items.push_back(b.child(i));
        return Term::list_lit(a.ann_ty(), std::move(items));
      }
      return Term::append(a, b);
    }
    case K::Elem: {
      Term x = norm_t(t.child(0));
      Term l = norm_t(t.child(1));
      if (l.kind() == K::Append) {
        // elem x (a ++ b) = elem x a || elem x b
        return norm_t(Term::bor(Term::elem(x, l.child(0)), Term::elem(x, l.child(1))));
      }
      if (l.kind() == K::ListLit) {
        Term acc = mk_bool(false);
        bool first = true;
        for (size_t i = l.arity(); i-- > 0;) {
          Term eq = Term::cmp(Term::CmpOp::Eq, x, l.child(i));
          acc = first ? eq : Term::bor(eq, acc);
          first = false;
        }
        return norm_t(acc);
      }
      return Term::elem(x, l);
    }
    case K::EnumCtor: {
      std::vector<Term> args;
      args.reserve(t.arity());
      for (size_t i = 0; i < t.arity(); ++i) args.push_back(norm_t(t.child(i)));
      return Term::enum_ctor(t.ann_ty(), t.ctor_name(), std::move(args));
    }
    case K::Arith: {
      Term a = norm_t(t.child(0));
      Term b = norm_t(t.child(1));
      if (a.kind() == K::LitInt && b.kind() == K::LitInt) {
        int64_t x = a.lit_int(), y = b.lit_int();
        switch (t.arith_op()) {
          case Term::ArithOp::Add: return Term::lit_integer(x + y);
          case Term::ArithOp::Sub: return Term::lit_integer(x - y);
          case Term::ArithOp::Mul: return Term::lit_integer(x * y);
          case Term::ArithOp::Div: return Term::lit_integer(y == 0 ? 0 : x / y);
          case Term::ArithOp::Mod: return Term::lit_integer(y == 0 ? 0 : x % y);
        }
      }
      // x + 0, 0 + x, x - 0, x * 1, 1 * x
      if (b.kind() == K::LitInt && b.lit_int() == 0 &&
          (t.arith_op() == Term::ArithOp::Add || t.arith_op() == Term::ArithOp::Sub))
        return a;
      if (a.kind() == K::LitInt && a.lit_int() == 0 && t.arith_op() == Term::ArithOp::Add)
        return b;
      if (b.kind() == K::LitInt && b.lit_int() == 1 && t.arith_op() == Term::ArithOp::Mul)
        return a;
      if (a.kind() == K::LitInt && a.lit_int() == 1 && t.arith_op() == Term::ArithOp::Mul)
        return b;
      return Term::arith(t.arith_op(), a, b);
    }
    case K::Cmp: {
      Term a = norm_t(t.child(0));
      Term b = norm_t(t.child(1));
      if (t.cmp_op() == Term::CmpOp::Eq || t.cmp_op() == Term::CmpOp::Ne) {
        Tri r = term_eq_tri(a, b);
        if (r != Tri::Unknown)
          return mk_bool((r == Tri::True) == (t.cmp_op() == Term::CmpOp::Eq));
      } else if (a.kind() == K::LitInt && b.kind() == K::LitInt) {
        bool r = t.cmp_op() == Term::CmpOp::Lt ? a.lit_int() < b.lit_int()
                                               : a.lit_int() <= b.lit_int();
        return mk_bool(r);
      }
      return Term::cmp(t.cmp_op(), a, b);
    }
    case K::BoolOp: {
      if (t.bool_op() == Term::BoolK::Not) {
        Term a = norm_t(t.child(0));
        if (a.kind() == K::LitBool) return mk_bool(!a.lit_bool());
        if (a.kind() == K::BoolOp && a.bool_op() == Term::BoolK::Not) return a.child(0);
        return Term::bnot(a);
      }
      Term a = norm_t(t.child(0));
      Term b = norm_t(t.child(1));
      bool isAnd = t.bool_op() == Term::BoolK::And;
      if (a.kind() == K::LitBool) {
        if (a.lit_bool() == isAnd) return b; // true && b / false || b
        return a;                            // false && b / true || b
      }
      if (b.kind() == K::LitBool) {
        if (b.lit_bool() == isAnd) return a;
        return b;
      }
      return isAnd ? Term::band(a, b) : Term::bor(a, b);
    }
    case K::Ite: {
      Term c = norm_t(t.child(0));
      if (c.kind() == K::LitBool) return c.lit_bool() ? norm_t(t.child(1)) : norm_t(t.child(2));
      return Term::ite(c, norm_t(t.child(1)), norm_t(t.child(2)));
    }
    case K::Apply: return Term::apply(t.fn_name(), t.ann_ty(), norm_t(t.child(0)));
  }
  return t;
}

bool nonempty_carrier(const Ty& ty) {
  using K = Ty::Kind;
  switch (ty.kind()) {
    case K::Unit:
    case K::Bool:
    case K::Int:
    case K::List:
      return true; // int carriers have lo <= hi by invariant; lists contain []
    case K::Pair: return nonempty_carrier(ty.fst()) && nonempty_carrier(ty.snd());
    case K::Sum: return nonempty_carrier(ty.left()) || nonempty_carrier(ty.right());
    case K::Enum: {
      for (const auto& c : ty.ctors()) {
        bool ok = true;
        for (const auto& a : c.args) ok = ok && nonempty_carrier(a);
        if (ok) return true;
      }
      return false;
    }
    case K::Fn: return true;
  }
  return true;
}

Formula norm_f(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top:
    case K::Bot:
      return f;
    case K::And: {
      Formula a = norm_f(f.child(0));
      Formula b = norm_f(f.child(1));
      if (a.kind() == K::Bot || b.kind() == K::Bot) return Formula::bot();
      if (a.kind() == K::Top) return b;
      if (b.kind() == K::Top) return a;
      return Formula::conj(a, b);
    }
    case K::Or: {
      Formula a = norm_f(f.child(0));
      Formula b = norm_f(f.child(1));
      if (a.kind() == K::Top || b.kind() == K::Top) return Formula::top();
      if (a.kind() == K::Bot) return b;
      if (b.kind() == K::Bot) return a;
      return Formula::disj(a, b);
    }
    case K::Imp: {
      Formula a = norm_f(f.child(0));
      Formula b = norm_f(f.child(1));
      if (a.kind() == K::Top) return b;
      if (a.kind() == K::Bot) return Formula::top();
      if (b.kind() == K::Top) return Formula::top();
      return Formula::impl(a, b);
    }
    case K::Not: {
      Formula a = norm_f(f.child(0));
      if (a.kind() == K::Top) return Formula::bot();
      if (a.kind() == K::Bot) return Formula::top();
      if (a.kind() == K::Not) return a.child(0);
      return Formula::neg(a);
    }
    case K::TermAtom: {
      Term t = norm_t(f.term(0));
      if (t.kind() == Term::Kind::LitBool) return t.lit_bool() ? Formula::top() : Formula::bot();
      return Formula::atom(t);
    }
    case K::Eq: {
      Term a = norm_t(f.term(0));
      Term b = norm_t(f.term(1));
      Tri r = term_eq_tri(a, b);
      if (r == Tri::True) return Formula::top();
      if (r == Tri::False) return Formula::bot();
      return Formula::eq(a, b);
    }
    case K::Forall:
    case K::Exists: {
      bool isAll = f.kind() == K::Forall;
      if (f.qty().is_empty_enum()) return isAll ? Formula::top() : Formula::bot();
      Formula body = norm_f(f.child(0));
      if (body.kind() == K::Top) return Formula::top();
      if (body.kind() == K::Bot) return Formula::bot();
      if (!free_term_vars(body).count(f.qvar())) return body; // vacuous, carrier nonempty
      return isAll ? Formula::forall(f.qvar(), f.qty(), body)
                   : Formula::exists(f.qvar(), f.qty(), body);
    }
    case K::PApply: {
      std::vector<Term> args;
      args.reserve(f.terms().size());
      for (const auto& t : f.terms()) args.push_back(norm_t(t));
      return Formula::papply(f.pvar(), std::move(args));
    }
    case K::PLamRedex: {
      std::map<std::string, Term> repl;
      for (size_t i = 0; i < f.binders().size(); ++i)
        repl.emplace(f.binders()[i].name, norm_t(f.terms()[i]));
      return norm_f(subst_formula_many(f.child(0), repl));
    }
    case K::PForall: {
      Formula body = norm_f(f.child(0));
      if (body.kind() == K::Top) return Formula::top();
      if (!free_pred_vars(body).count(f.pvar())) return body;
      return Formula::pforall(f.pvar(), f.pforall_args(), body);
    }
  }
  return f;
}

} // namespace

Term normalize_term(const Term& t) { return norm_t(t); }

Formula normalize(const Formula& f) { return norm_f(f); }

} // namespace effver::logic

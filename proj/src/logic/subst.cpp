#include "logic/subst.hpp"

#include <functional>

#include "logic/fresh.hpp"

namespace effver::logic {

namespace {

void ftv_term(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Var:
      if (!bound.count(t.var_name())) out.insert(t.var_name());
      return;
    case K::CaseSum: {
      ftv_term(t.child(0), bound, out);
      bool lb = bound.insert(t.case_left_var()).second;
      ftv_term(t.child(1), bound, out);
      if (lb) bound.erase(t.case_left_var());
      bool rb = bound.insert(t.case_right_var()).second;
      ftv_term(t.child(2), bound, out);
      if (rb) bound.erase(t.case_right_var());
      return;
    }
    default:
      for (size_t i = 0; i < t.arity(); ++i) ftv_term(t.child(i), bound, out);
      return;
  }
}

void ftv_formula(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Forall:
    case K::Exists: {
      bool nb = bound.insert(f.qvar()).second;
      ftv_formula(f.child(0), bound, out);
      if (nb) bound.erase(f.qvar());
      return;
    }
    case K::PLamRedex: {
      for (const auto& t : f.terms()) ftv_term(t, bound, out);
      std::vector<std::string> added;
      for (const auto& b : f.binders())
        if (bound.insert(b.name).second) added.push_back(b.name);
      ftv_formula(f.child(0), bound, out);
      for (const auto& n : added) bound.erase(n);
      return;
    }
    default: {
      for (const auto& t : f.terms()) ftv_term(t, bound, out);
      for (size_t i = 0; i < f.fsub_count(); ++i) ftv_formula(f.child(i), bound, out);
      return;
    }
  }
}

} // namespace

std::set<std::string> free_term_vars(const Term& t) {
  std::set<std::string> bound, out;
  ftv_term(t, bound, out);
  return out;
}

std::set<std::string> free_term_vars(const Formula& f) {
  std::set<std::string> bound, out;
  ftv_formula(f, bound, out);
  return out;
}

std::set<std::string> free_pred_vars(const Formula& f) {
  using K = Formula::Kind;
  std::set<std::string> out;
  switch (f.kind()) {
    case K::PApply:
      out.insert(f.pvar());
      return out;
    case K::PForall: {
      out = free_pred_vars(f.child(0));
      out.erase(f.pvar());
      return out;
    }
    default: {
      for (size_t i = 0; i < f.fsub_count(); ++i) {
        auto sub = free_pred_vars(f.child(i));
        out.insert(sub.begin(), sub.end());
      }
      return out;
    }
  }
}

void collect_fn_apps(const Term& t, std::map<std::string, Ty>& out) {
  if (t.kind() == Term::Kind::Apply) out.emplace(t.fn_name(), t.ann_ty());
  for (size_t i = 0; i < t.arity(); ++i) collect_fn_apps(t.child(i), out);
}

void collect_fn_apps(const Formula& f, std::map<std::string, Ty>& out) {
  for (const auto& t : f.terms()) collect_fn_apps(t, out);
  for (size_t i = 0; i < f.fsub_count(); ++i) collect_fn_apps(f.child(i), out);
}

Term subst_term(const Term& t, const std::string& var, const Term& replacement) {
  return subst_term_many(t, {{var, replacement}});
}

namespace {

Term subst_t(const Term& t, const std::map<std::string, Term>& repl,
             const std::set<std::string>& avoid);

// Rebuilds a term node with substituted children.
Term rebuild_term(const Term& t, const std::map<std::string, Term>& repl,
                  const std::set<std::string>& avoid) {
  using K = Term::Kind;
  auto go = [&](const Term& s) { return subst_t(s, repl, avoid); };
  switch (t.kind()) {
    case K::Var:
    case K::LitUnit:
    case K::LitBool:
    case K::LitInt:
      return t;
    case K::Pair: return Term::pair(go(t.child(0)), go(t.child(1)));
    case K::Proj: return Term::proj(t.proj_index(), go(t.child(0)));
    case K::Inl: return Term::inl(go(t.child(0)), t.ann_ty());
    case K::Inr: return Term::inr(go(t.child(0)), t.ann_ty());
    case K::CaseSum: {
      // handled by caller (binders)
      return t;
    }
    case K::ListLit: {
      std::vector<Term> items;
      items.reserve(t.arity());
      for (size_t i = 0; i < t.arity(); ++i) items.push_back(go(t.child(i)));
      return Term::list_lit(t.ann_ty(), std::move(items));
    }
    case K::Cons: return Term::cons(go(t.child(0)), go(t.child(1)));
    case K::Append: return Term::append(go(t.child(0)), go(t.child(1)));
    case K::Elem: return Term::elem(go(t.child(0)), go(t.child(1)));
    case K::EnumCtor: {
      std::vector<Term> args;
      args.reserve(t.arity());
      for (size_t i = 0; i < t.arity(); ++i) args.push_back(go(t.child(i)));
      return Term::enum_ctor(t.ann_ty(), t.ctor_name(), std::move(args));
    }
    case K::Arith: return Term::arith(t.arith_op(), go(t.child(0)), go(t.child(1)));
    case K::Cmp: return Term::cmp(t.cmp_op(), go(t.child(0)), go(t.child(1)));
    case K::BoolOp:
      if (t.bool_op() == Term::BoolK::Not) return Term::bnot(go(t.child(0)));
      return t.bool_op() == Term::BoolK::And ? Term::band(go(t.child(0)), go(t.child(1)))
                                             : Term::bor(go(t.child(0)), go(t.child(1)));
    case K::Ite: return Term::ite(go(t.child(0)), go(t.child(1)), go(t.child(2)));
    case K::Apply: return Term::apply(t.fn_name(), t.ann_ty(), go(t.child(0)));
  }
  return t;
}

Term subst_t(const Term& t, const std::map<std::string, Term>& repl,
             const std::set<std::string>& avoid) {
  using K = Term::Kind;
  if (t.kind() == K::Var) {
    auto it = repl.find(t.var_name());
    return it != repl.end() ? it->second : t;
  }
  if (t.kind() == K::CaseSum) {
    Term scrut = subst_t(t.child(0), repl, avoid);
    std::string lv = t.case_left_var();
    std::string rv = t.case_right_var();
    Term lbody = t.child(1);
    Term rbody = t.child(2);
    auto handle = [&](std::string& v, Term& body) {
      std::map<std::string, Term> inner = repl;
      inner.erase(v);
      if (avoid.count(v)) {
        Ty vt = Ty::unit();
        // Recover binder type from usage is unnecessary: rename with a var of
        // unknown type is unsafe, so look it up via a free-var occurrence.
        // Binder types are only needed to construct the renamed variable;
        // scan the body for the first occurrence.
        std::function<bool(const Term&, Ty&)> find = [&](const Term& s, Ty& out) -> bool {
          if (s.kind() == K::Var && s.var_name() == v) {
            out = s.var_ty();
            return true;
          }
          for (size_t i = 0; i < s.arity(); ++i)
            if (find(s.child(i), out)) return true;
          return false;
        };
        if (find(body, vt)) {
          std::string nv = fresh_name(v);
          body = subst_term(body, v, Term::var(nv, vt));
          v = nv;
        }
      }
      if (!inner.empty()) body = subst_t(body, inner, avoid);
    };
    handle(lv, lbody);
    handle(rv, rbody);
    return Term::case_sum(std::move(scrut), std::move(lv), std::move(lbody), std::move(rv),
                          std::move(rbody));
  }
  return rebuild_term(t, repl, avoid);
}

std::set<std::string> range_fvs(const std::map<std::string, Term>& repl) {
  std::set<std::string> avoid;
  for (const auto& [k, v] : repl) {
    auto fv = free_term_vars(v);
    avoid.insert(fv.begin(), fv.end());
  }
  return avoid;
}

Formula subst_f(const Formula& f, std::map<std::string, Term> repl,
                const std::set<std::string>& avoid) {
  using K = Formula::Kind;
  if (repl.empty()) return f;
  switch (f.kind()) {
    case K::Top:
    case K::Bot:
      return f;
    case K::And: return Formula::conj(subst_f(f.child(0), repl, avoid), subst_f(f.child(1), repl, avoid));
    case K::Or: return Formula::disj(subst_f(f.child(0), repl, avoid), subst_f(f.child(1), repl, avoid));
    case K::Imp: return Formula::impl(subst_f(f.child(0), repl, avoid), subst_f(f.child(1), repl, avoid));
    case K::Not: return Formula::neg(subst_f(f.child(0), repl, avoid));
    case K::TermAtom: return Formula::atom(subst_t(f.term(0), repl, avoid));
    case K::Eq: return Formula::eq(subst_t(f.term(0), repl, avoid), subst_t(f.term(1), repl, avoid));
    case K::Forall:
    case K::Exists: {
      std::string v = f.qvar();
      Formula body = f.child(0);
      repl.erase(v);
      if (avoid.count(v)) {
        std::string nv = fresh_name(v);
        body = subst_formula(body, v, Term::var(nv, f.qty()));
        v = nv;
      }
      Formula nb = subst_f(body, repl, avoid);
      return f.kind() == K::Forall ? Formula::forall(v, f.qty(), nb)
                                   : Formula::exists(v, f.qty(), nb);
    }
    case K::PApply: {
      std::vector<Term> args;
      args.reserve(f.terms().size());
      for (const auto& t : f.terms()) args.push_back(subst_t(t, repl, avoid));
      return Formula::papply(f.pvar(), std::move(args));
    }
    case K::PLamRedex: {
      std::vector<Term> args;
      args.reserve(f.terms().size());
      for (const auto& t : f.terms()) args.push_back(subst_t(t, repl, avoid));
      std::vector<Binder> bs = f.binders();
      Formula body = f.child(0);
      auto inner = repl;
      for (auto& b : bs) inner.erase(b.name);
      for (auto& b : bs) {
        if (avoid.count(b.name)) {
          std::string nv = fresh_name(b.name);
          body = subst_formula(body, b.name, Term::var(nv, b.ty));
          b.name = nv;
        }
      }
      return Formula::plam_redex(std::move(bs), subst_f(body, inner, avoid), std::move(args));
    }
    case K::PForall:
      return Formula::pforall(f.pvar(), f.pforall_args(), subst_f(f.child(0), repl, avoid));
  }
  return f;
}

} // namespace

Formula subst_formula(const Formula& f, const std::string& var, const Term& replacement) {
  return subst_formula_many(f, {{var, replacement}});
}

Formula subst_formula_many(const Formula& f, const std::map<std::string, Term>& repl) {
  return subst_f(f, repl, range_fvs(repl));
}

Term subst_term_many(const Term& t, const std::map<std::string, Term>& repl) {
  return subst_t(t, repl, range_fvs(repl));
}

Formula subst_pred(const Formula& f, const std::string& pvar, const PredAbs& abs) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top:
    case K::Bot:
    case K::TermAtom:
    case K::Eq:
      return f;
    case K::And: return Formula::conj(subst_pred(f.child(0), pvar, abs), subst_pred(f.child(1), pvar, abs));
    case K::Or: return Formula::disj(subst_pred(f.child(0), pvar, abs), subst_pred(f.child(1), pvar, abs));
    case K::Imp: return Formula::impl(subst_pred(f.child(0), pvar, abs), subst_pred(f.child(1), pvar, abs));
    case K::Not: return Formula::neg(subst_pred(f.child(0), pvar, abs));
    case K::Forall:
    case K::Exists: {
      std::string v = f.qvar();
      Formula body = f.child(0);
      // Avoid capturing the abstraction's free term variables.
      auto fvs = free_term_vars(*abs.body);
      for (const auto& b : abs.binders) fvs.erase(b.name);
      if (fvs.count(v)) {
        std::string nv = fresh_name(v);
        body = subst_formula(body, v, Term::var(nv, f.qty()));
        v = nv;
      }
      Formula nb = subst_pred(body, pvar, abs);
      return f.kind() == K::Forall ? Formula::forall(v, f.qty(), nb)
                                   : Formula::exists(v, f.qty(), nb);
    }
    case K::PApply: {
      if (f.pvar() != pvar) return f;
      return Formula::plam_redex(abs.binders, *abs.body, f.terms());
    }
    case K::PLamRedex: {
      std::vector<Binder> bs = f.binders();
      Formula body = f.child(0);
      auto fvs = free_term_vars(*abs.body);
      for (const auto& b : abs.binders) fvs.erase(b.name);
      for (auto& b : bs) {
        if (fvs.count(b.name)) {
          std::string nv = fresh_name(b.name);
          body = subst_formula(body, b.name, Term::var(nv, b.ty));
          b.name = nv;
        }
      }
      return Formula::plam_redex(std::move(bs), subst_pred(body, pvar, abs), f.terms());
    }
    case K::PForall: {
      if (f.pvar() == pvar) return f; // shadowed
      return Formula::pforall(f.pvar(), f.pforall_args(), subst_pred(f.child(0), pvar, abs));
    }
  }
  return f;
}

Formula rename_pred(const Formula& f, const std::string& from, const std::string& to) {
  using K = Formula::Kind;
  if (from == to) return f;
  switch (f.kind()) {
    case K::Top:
    case K::Bot:
    case K::TermAtom:
    case K::Eq:
      return f;
    case K::And: return Formula::conj(rename_pred(f.child(0), from, to), rename_pred(f.child(1), from, to));
    case K::Or: return Formula::disj(rename_pred(f.child(0), from, to), rename_pred(f.child(1), from, to));
    case K::Imp: return Formula::impl(rename_pred(f.child(0), from, to), rename_pred(f.child(1), from, to));
    case K::Not: return Formula::neg(rename_pred(f.child(0), from, to));
    case K::Forall: return Formula::forall(f.qvar(), f.qty(), rename_pred(f.child(0), from, to));
    case K::Exists: return Formula::exists(f.qvar(), f.qty(), rename_pred(f.child(0), from, to));
    case K::PApply:
      if (f.pvar() == from) return Formula::papply(to, f.terms());
      return f;
    case K::PLamRedex:
      return Formula::plam_redex(f.binders(), rename_pred(f.child(0), from, to), f.terms());
    case K::PForall:
      if (f.pvar() == from) return f;
      return Formula::pforall(f.pvar(), f.pforall_args(), rename_pred(f.child(0), from, to));
  }
  return f;
}

Formula subst_pred_fn(const Formula& f, const std::string& pvar,
                      const std::function<Formula(const std::vector<Term>&)>& fn) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top:
    case K::Bot:
    case K::TermAtom:
    case K::Eq:
      return f;
    case K::And:
      return Formula::conj(subst_pred_fn(f.child(0), pvar, fn),
                           subst_pred_fn(f.child(1), pvar, fn));
    case K::Or:
      return Formula::disj(subst_pred_fn(f.child(0), pvar, fn),
                           subst_pred_fn(f.child(1), pvar, fn));
    case K::Imp:
      return Formula::impl(subst_pred_fn(f.child(0), pvar, fn),
                           subst_pred_fn(f.child(1), pvar, fn));
    case K::Not:
      return Formula::neg(subst_pred_fn(f.child(0), pvar, fn));
    case K::Forall:
      return Formula::forall(f.qvar(), f.qty(), subst_pred_fn(f.child(0), pvar, fn));
    case K::Exists:
      return Formula::exists(f.qvar(), f.qty(), subst_pred_fn(f.child(0), pvar, fn));
    case K::PApply:
      if (f.pvar() != pvar) return f;
      return fn(f.terms());
    case K::PLamRedex:
      return Formula::plam_redex(f.binders(), subst_pred_fn(f.child(0), pvar, fn), f.terms());
    case K::PForall:
      if (f.pvar() == pvar) return f;
      return Formula::pforall(f.pvar(), f.pforall_args(), subst_pred_fn(f.child(0), pvar, fn));
  }
  return f;
}

namespace {

bool alpha_term(const Term& a, const Term& b, std::map<std::string, std::string>& m) {
  using K = Term::Kind;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case K::Var: {
      auto it = m.find(a.var_name());
      const std::string& expect = it != m.end() ? it->second : a.var_name();
      return expect == b.var_name() && a.var_ty() == b.var_ty();
    }
    case K::CaseSum: {
      if (!alpha_term(a.child(0), b.child(0), m)) return false;
      auto saved = m;
      m[a.case_left_var()] = b.case_left_var();
      bool okl = alpha_term(a.child(1), b.child(1), m);
      m = saved;
      if (!okl) return false;
      m[a.case_right_var()] = b.case_right_var();
      bool okr = alpha_term(a.child(2), b.child(2), m);
      m = saved;
      return okr;
    }
    default: {
      if (a.arity() != b.arity()) return false;
      if (a.kind() == K::LitBool && a.lit_bool() != b.lit_bool()) return false;
      if (a.kind() == K::LitInt && a.lit_int() != b.lit_int()) return false;
      if (a.kind() == K::Proj && a.proj_index() != b.proj_index()) return false;
      if (a.kind() == K::Arith && a.arith_op() != b.arith_op()) return false;
      if (a.kind() == K::Cmp && a.cmp_op() != b.cmp_op()) return false;
      if (a.kind() == K::BoolOp && a.bool_op() != b.bool_op()) return false;
      if (a.kind() == K::EnumCtor && a.ctor_name() != b.ctor_name()) return false;
      if (a.kind() == K::Apply && a.fn_name() != b.fn_name()) return false;
      if ((a.kind() == K::Inl || a.kind() == K::Inr || a.kind() == K::ListLit ||
           a.kind() == K::EnumCtor || a.kind() == K::Apply) &&
          !(a.ann_ty() == b.ann_ty()))
        return false;
      for (size_t i = 0; i < a.arity(); ++i)
        if (!alpha_term(a.child(i), b.child(i), m)) return false;
      return true;
    }
  }
}

bool alpha_f(const Formula& a, const Formula& b, std::map<std::string, std::string>& tm,
             std::map<std::string, std::string>& pm) {
  using K = Formula::Kind;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case K::Top:
    case K::Bot:
      return true;
    case K::And:
    case K::Or:
    case K::Imp:
      return alpha_f(a.child(0), b.child(0), tm, pm) && alpha_f(a.child(1), b.child(1), tm, pm);
    case K::Not:
      return alpha_f(a.child(0), b.child(0), tm, pm);
    case K::TermAtom:
      return alpha_term(a.term(0), b.term(0), tm);
    case K::Eq:
      return alpha_term(a.term(0), b.term(0), tm) && alpha_term(a.term(1), b.term(1), tm);
    case K::Forall:
    case K::Exists: {
      if (!(a.qty() == b.qty())) return false;
      auto saved = tm;
      tm[a.qvar()] = b.qvar();
      bool ok = alpha_f(a.child(0), b.child(0), tm, pm);
      tm = saved;
      return ok;
    }
    case K::PApply: {
      auto it = pm.find(a.pvar());
      const std::string& expect = it != pm.end() ? it->second : a.pvar();
      if (expect != b.pvar()) return false;
      if (a.terms().size() != b.terms().size()) return false;
      for (size_t i = 0; i < a.terms().size(); ++i)
        if (!alpha_term(a.terms()[i], b.terms()[i], tm)) return false;
      return true;
    }
    case K::PLamRedex: {
      if (a.binders().size() != b.binders().size()) return false;
      if (a.terms().size() != b.terms().size()) return false;
      for (size_t i = 0; i < a.terms().size(); ++i)
        if (!alpha_term(a.terms()[i], b.terms()[i], tm)) return false;
      auto saved = tm;
      for (size_t i = 0; i < a.binders().size(); ++i) {
        if (!(a.binders()[i].ty == b.binders()[i].ty)) return false;
        tm[a.binders()[i].name] = b.binders()[i].name;
      }
      bool ok = alpha_f(a.child(0), b.child(0), tm, pm);
      tm = saved;
      return ok;
    }
    case K::PForall: {
      if (a.pforall_args().size() != b.pforall_args().size()) return false;
      for (size_t i = 0; i < a.pforall_args().size(); ++i)
        if (!(a.pforall_args()[i] == b.pforall_args()[i])) return false;
      auto saved = pm;
      pm[a.pvar()] = b.pvar();
      bool ok = alpha_f(a.child(0), b.child(0), tm, pm);
      pm = saved;
      return ok;
    }
  }
  return false;
}

} // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  std::map<std::string, std::string> tm, pm;
  return alpha_f(a, b, tm, pm);
}

} // namespace effver::logic

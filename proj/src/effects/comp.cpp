#include "effects/comp.hpp"

#include "logic/errors.hpp"
#include "logic/fresh.hpp"
#include "logic/subst.hpp"
#include "logic/typecheck.hpp"

namespace effver::effects {

using logic::Term;
using logic::Ty;

Comp Comp::ret(Term value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ret;
  n->term = std::move(value);
  return Comp(std::move(n));
}

Comp Comp::call(std::string op, Term arg, std::string binder, Comp cont) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Call;
  n->name = std::move(op);
  n->term = std::move(arg);
  n->binder = std::move(binder);
  n->sub = {std::move(cont)};
  return Comp(std::move(n));
}

Comp Comp::ite(Term cond, Comp then_c, Comp else_c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ite;
  n->term = std::move(cond);
  n->sub = {std::move(then_c), std::move(else_c)};
  return Comp(std::move(n));
}

Comp Comp::let_pure(std::string binder, Term bound, Comp body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Let;
  n->binder = std::move(binder);
  n->term2 = std::move(bound);
  n->sub = {std::move(body)};
  return Comp(std::move(n));
}

bool Comp::operator==(const Comp& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind || node_->name != o.node_->name ||
      node_->binder != o.node_->binder)
    return false;
  if (!(node_->term == o.node_->term) || !(node_->term2 == o.node_->term2)) return false;
  if (node_->sub.size() != o.node_->sub.size()) return false;
  for (size_t i = 0; i < node_->sub.size(); ++i)
    if (!(node_->sub[i] == o.node_->sub[i])) return false;
  return true;
}

Comp comp_ret(const Term& t) { return Comp::ret(t); }

Comp comp_bind(const Comp& m, const std::string& binder, const Comp& k) {
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return comp_subst(k, binder, m.ret_value());
    case Comp::Kind::Call:
      return Comp::call(m.op(), m.arg(), m.binder(), comp_bind(m.cont(), binder, k));
    case Comp::Kind::Ite:
      return Comp::ite(m.cond(), comp_bind(m.then_branch(), binder, k),
                       comp_bind(m.else_branch(), binder, k));
    case Comp::Kind::Let:
      return Comp::let_pure(m.binder(), m.bound(), comp_bind(m.body(), binder, k));
  }
  return m;
}

Comp comp_subst(const Comp& m, const std::string& var, const Term& t) {
  using logic::subst_term;
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return Comp::ret(subst_term(m.ret_value(), var, t));
    case Comp::Kind::Call: {
      Term arg = subst_term(m.arg(), var, t);
      if (m.binder() == var) return Comp::call(m.op(), arg, m.binder(), m.cont());
      // Binders are globally fresh by construction, so capture cannot occur.
      return Comp::call(m.op(), arg, m.binder(), comp_subst(m.cont(), var, t));
    }
    case Comp::Kind::Ite:
      return Comp::ite(subst_term(m.cond(), var, t), comp_subst(m.then_branch(), var, t),
                       comp_subst(m.else_branch(), var, t));
    case Comp::Kind::Let: {
      Term bound = subst_term(m.bound(), var, t);
      if (m.binder() == var) return Comp::let_pure(m.binder(), bound, m.body());
      return Comp::let_pure(m.binder(), bound, comp_subst(m.body(), var, t));
    }
  }
  return m;
}

Comp gen_of_op(const OpDecl& op, const Term& i) {
  Ty got = logic::typecheck(i);
  if (!(got == op.input))
    throw TypeError("operation " + op.name + " expects " + op.input.show() + ", found " +
                           got.show());
  std::string o = logic::fresh_name("o");
  return Comp::call(op.name, i, o, Comp::ret(Term::var(o, op.output)));
}

Comp op_of_gen(const OpDecl& op, const Term& i, const std::string& binder, const Comp& k) {
  return comp_bind(gen_of_op(op, i), binder, k);
}

Ty comp_typecheck(const Comp& m, const Signature& sig) {
  
  switch (m.kind()) {
    case Comp::Kind::Ret:
      return logic::typecheck(m.ret_value());
    case Comp::Kind::Call: {
      const OpDecl* op = sig.find(m.op());
      if (!op) throw TypeError("operation " + m.op() + " not in signature " + sig.name);
      Ty arg = logic::typecheck(m.arg());
      if (!(arg == op->input))
        throw TypeError("operation " + m.op() + " expects " + op->input.show() + ", found " +
                        arg.show());
      return comp_typecheck(m.cont(), sig);
    }
    case Comp::Kind::Ite: {
      Ty c = logic::typecheck(m.cond());
      if (!(c == Ty::boolean()))
        throw TypeError("condition must be boolean, found " + c.show());
      Ty a = comp_typecheck(m.then_branch(), sig);
      Ty b = comp_typecheck(m.else_branch(), sig);
      if (!(a == b))
        throw TypeError("branches return " + a.show() + " and " + b.show());
      return a;
    }
    case Comp::Kind::Let: {
      logic::typecheck(m.bound());
      return comp_typecheck(m.body(), sig);
    }
  }
  throw TypeError("unreachable computation kind");
}

namespace {
void cfv(const Comp& m, std::set<std::string>& bound, std::set<std::string>& out) {
  auto term_fvs = [&](const Term& t) {
    for (const auto& v : logic::free_term_vars(t))
      if (!bound.count(v)) out.insert(v);
  };
  switch (m.kind()) {
    case Comp::Kind::Ret:
      term_fvs(m.ret_value());
      return;
    case Comp::Kind::Call: {
      term_fvs(m.arg());
      bool nb = bound.insert(m.binder()).second;
      cfv(m.cont(), bound, out);
      if (nb) bound.erase(m.binder());
      return;
    }
    case Comp::Kind::Ite:
      term_fvs(m.cond());
      cfv(m.then_branch(), bound, out);
      cfv(m.else_branch(), bound, out);
      return;
    case Comp::Kind::Let: {
      term_fvs(m.bound());
      bool nb = bound.insert(m.binder()).second;
      cfv(m.body(), bound, out);
      if (nb) bound.erase(m.binder());
      return;
    }
  }
}
} // namespace

std::set<std::string> comp_free_vars(const Comp& m) {
  std::set<std::string> bound, out;
  cfv(m, bound, out);
  return out;
}

} // namespace effver::effects

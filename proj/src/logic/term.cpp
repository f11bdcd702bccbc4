#include "logic/term.hpp"

namespace effver::logic {

namespace {
using NodePtr = std::shared_ptr<void>;
}

#define MAKE(...)                         \
  auto n = std::make_shared<Node>();      \
  __VA_ARGS__;                            \
  return Term(std::move(n))

Term Term::var(std::string name, Ty ty) {
  MAKE(n->kind = Kind::Var; n->name = std::move(name); n->ty = std::move(ty));
}
Term Term::lit_unit() {
  MAKE(n->kind = Kind::LitUnit);
}
Term Term::lit_boolean(bool b) {
  MAKE(n->kind = Kind::LitBool; n->b = b);
}
Term Term::lit_integer(int64_t i) {
  MAKE(n->kind = Kind::LitInt; n->i = i);
}
Term Term::pair(Term a, Term b) {
  MAKE(n->kind = Kind::Pair; n->sub = {std::move(a), std::move(b)});
}
Term Term::proj(int idx, Term t) {
  MAKE(n->kind = Kind::Proj; n->tag = idx; n->sub = {std::move(t)});
}
Term Term::inl(Term t, Ty sum_ty) {
  MAKE(n->kind = Kind::Inl; n->sub = {std::move(t)}; n->ty = std::move(sum_ty));
}
Term Term::inr(Term t, Ty sum_ty) {
  MAKE(n->kind = Kind::Inr; n->sub = {std::move(t)}; n->ty = std::move(sum_ty));
}
Term Term::case_sum(Term scrut, std::string lv, Term lbody, std::string rv, Term rbody) {
  MAKE(n->kind = Kind::CaseSum; n->name = std::move(lv); n->name2 = std::move(rv);
       n->sub = {std::move(scrut), std::move(lbody), std::move(rbody)});
}
Term Term::list_lit(Ty elem_ty, std::vector<Term> items) {
  MAKE(n->kind = Kind::ListLit; n->ty = std::move(elem_ty); n->sub = std::move(items));
}
Term Term::cons(Term head, Term tail) {
  MAKE(n->kind = Kind::Cons; n->sub = {std::move(head), std::move(tail)});
}
Term Term::append(Term a, Term b) {
  MAKE(n->kind = Kind::Append; n->sub = {std::move(a), std::move(b)});
}
Term Term::elem(Term x, Term l) {
  MAKE(n->kind = Kind::Elem; n->sub = {std::move(x), std::move(l)});
}
Term Term::enum_ctor(Ty enum_ty, std::string ctor, std::vector<Term> args) {
  MAKE(n->kind = Kind::EnumCtor; n->ty = std::move(enum_ty); n->name = std::move(ctor);
       n->sub = std::move(args));
}
Term Term::arith(ArithOp op, Term a, Term b) {
  MAKE(n->kind = Kind::Arith; n->tag = static_cast<int>(op);
       n->sub = {std::move(a), std::move(b)});
}
Term Term::cmp(CmpOp op, Term a, Term b) {
  MAKE(n->kind = Kind::Cmp; n->tag = static_cast<int>(op);
       n->sub = {std::move(a), std::move(b)});
}
Term Term::band(Term a, Term b) {
  MAKE(n->kind = Kind::BoolOp; n->tag = static_cast<int>(BoolK::And);
       n->sub = {std::move(a), std::move(b)});
}
Term Term::bor(Term a, Term b) {
  MAKE(n->kind = Kind::BoolOp; n->tag = static_cast<int>(BoolK::Or);
       n->sub = {std::move(a), std::move(b)});
}
Term Term::bnot(Term a) {
  MAKE(n->kind = Kind::BoolOp; n->tag = static_cast<int>(BoolK::Not); n->sub = {std::move(a)});
}
Term Term::ite(Term c, Term a, Term b) {
  MAKE(n->kind = Kind::Ite; n->sub = {std::move(c), std::move(a), std::move(b)});
}
Term Term::apply(std::string fn, Ty fn_ty, Term arg) {
  MAKE(n->kind = Kind::Apply; n->name = std::move(fn); n->ty = std::move(fn_ty);
       n->sub = {std::move(arg)});
}
Term Term::tuple(const std::vector<Term>& parts) {
  if (parts.empty()) return lit_unit();
  Term acc = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) acc = pair(parts[i], acc);
  return acc;
}

#undef MAKE

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  const Node& a = *node_;
  const Node& b = *o.node_;
  if (a.kind != b.kind || a.tag != b.tag || a.b != b.b || a.i != b.i || a.name != b.name ||
      a.name2 != b.name2)
    return false;
  if (!(a.ty == b.ty)) return false;
  if (a.sub.size() != b.sub.size()) return false;
  for (size_t i = 0; i < a.sub.size(); ++i)
    if (!(a.sub[i] == b.sub[i])) return false;
  return true;
}

} // namespace effver::logic

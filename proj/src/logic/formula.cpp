#include "logic/formula.hpp"

namespace effver::logic {

#define MAKE(...)                         \
  auto n = std::make_shared<Node>();      \
  __VA_ARGS__;                            \
  return Formula(std::move(n))

Formula Formula::top() {
  MAKE(n->kind = Kind::Top);
}
Formula Formula::bot() {
  MAKE(n->kind = Kind::Bot);
}
Formula Formula::conj(Formula a, Formula b) {
  MAKE(n->kind = Kind::And; n->sub = {std::move(a), std::move(b)});
}
Formula Formula::disj(Formula a, Formula b) {
  MAKE(n->kind = Kind::Or; n->sub = {std::move(a), std::move(b)});
}
Formula Formula::impl(Formula a, Formula b) {
  MAKE(n->kind = Kind::Imp; n->sub = {std::move(a), std::move(b)});
}
Formula Formula::neg(Formula a) {
  MAKE(n->kind = Kind::Not; n->sub = {std::move(a)});
}
Formula Formula::atom(Term t) {
  MAKE(n->kind = Kind::TermAtom; n->terms = {std::move(t)});
}
Formula Formula::eq(Term a, Term b) {
  MAKE(n->kind = Kind::Eq; n->terms = {std::move(a), std::move(b)});
}
Formula Formula::forall(std::string var, Ty ty, Formula body) {
  MAKE(n->kind = Kind::Forall; n->name = std::move(var); n->ty = std::move(ty);
       n->sub = {std::move(body)});
}
Formula Formula::exists(std::string var, Ty ty, Formula body) {
  MAKE(n->kind = Kind::Exists; n->name = std::move(var); n->ty = std::move(ty);
       n->sub = {std::move(body)});
}
Formula Formula::papply(std::string pvar, std::vector<Term> args) {
  MAKE(n->kind = Kind::PApply; n->name = std::move(pvar); n->terms = std::move(args));
}
Formula Formula::plam_redex(std::vector<Binder> binders, Formula body, std::vector<Term> args) {
  MAKE(n->kind = Kind::PLamRedex; n->bs = std::move(binders); n->sub = {std::move(body)};
       n->terms = std::move(args));
}
Formula Formula::pforall(std::string pvar, std::vector<Ty> arg_tys, Formula body) {
  MAKE(n->kind = Kind::PForall; n->name = std::move(pvar); n->tys = std::move(arg_tys);
       n->sub = {std::move(body)});
}

#undef MAKE

Formula Formula::conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  const Node& a = *node_;
  const Node& b = *o.node_;
  if (a.kind != b.kind || a.name != b.name) return false;
  if (!(a.ty == b.ty)) return false;
  if (a.tys.size() != b.tys.size()) return false;
  for (size_t i = 0; i < a.tys.size(); ++i)
    if (!(a.tys[i] == b.tys[i])) return false;
  if (a.bs.size() != b.bs.size()) return false;
  for (size_t i = 0; i < a.bs.size(); ++i)
    if (a.bs[i].name != b.bs[i].name || !(a.bs[i].ty == b.bs[i].ty)) return false;
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i] == b.terms[i])) return false;
  if (a.sub.size() != b.sub.size()) return false;
  for (size_t i = 0; i < a.sub.size(); ++i)
    if (!(a.sub[i] == b.sub[i])) return false;
  return true;
}

PredAbs make_abs(std::vector<Binder> binders, Formula body) {
  return PredAbs{std::move(binders), std::make_shared<const Formula>(std::move(body))};
}

} // namespace effver::logic

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "logic/term.hpp"

namespace effver::logic {

// A predicate abstraction: (x1:T1 ... xk:Tk). body. Used when substituting a
// predicate variable and as the continuation slot of symbolic wp rules.
class Formula;
struct PredAbs {
  std::vector<Binder> binders;
  std::shared_ptr<const Formula> body;
};

// First-order formulas with predicate variables. Predicate variables are
// applied via PApply; substituting an abstraction for one leaves a
// PLamRedex that normalize() beta-reduces away. PForall quantifies a
// predicate variable; the finite-domain prover discharges it by table
// enumeration.
class Formula {
public:
  enum class Kind {
    Top,
    Bot,
    And,
    Or,
    Imp,
    Not,
    TermAtom,
    Eq,
    Forall,
    Exists,
    PApply,
    PLamRedex,
    PForall,
  };

  Kind kind() const { return node_->kind; }

  const Formula& child(size_t i = 0) const { return node_->sub[i]; }
  size_t fsub_count() const { return node_->sub.size(); }
  const Term& term(size_t i = 0) const { return node_->terms[i]; }
  const std::vector<Term>& terms() const { return node_->terms; }
  const std::string& qvar() const { return node_->name; }
  const Ty& qty() const { return node_->ty; }
  const std::string& pvar() const { return node_->name; }
  const std::vector<Binder>& binders() const { return node_->bs; }
  const std::vector<Ty>& pforall_args() const { return node_->tys; }

  static Formula top();
  static Formula bot();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula impl(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula atom(Term t);
  static Formula eq(Term a, Term b);
  static Formula forall(std::string var, Ty ty, Formula body);
  static Formula exists(std::string var, Ty ty, Formula body);
  static Formula papply(std::string pvar, std::vector<Term> args);
  static Formula plam_redex(std::vector<Binder> binders, Formula body, std::vector<Term> args);
  static Formula pforall(std::string pvar, std::vector<Ty> arg_tys, Formula body);

  static Formula conj_all(const std::vector<Formula>& fs);

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

private:
  struct Node {
    Kind kind;
    std::vector<Formula> sub;
    std::vector<Term> terms;
    std::string name;
    Ty ty = Ty::unit();
    std::vector<Binder> bs;
    std::vector<Ty> tys;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

PredAbs make_abs(std::vector<Binder> binders, Formula body);

} // namespace effver::logic

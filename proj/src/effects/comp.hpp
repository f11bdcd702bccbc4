#pragma once

#include <memory>
#include <set>

#include "effects/signature.hpp"
#include "logic/term.hpp"

namespace effver::effects {

// A finite free-monad computation tree over an effect signature. Binding a
// continuation grafts it onto every ret leaf; operations carry a syntactic
// continuation with a binder for the output.
class Comp {
public:
  enum class Kind { Ret, Call, Ite, Let };

  Kind kind() const { return node_->kind; }

  const logic::Term& ret_value() const { return node_->term; }
  const std::string& op() const { return node_->name; }
  const logic::Term& arg() const { return node_->term; }
  const std::string& binder() const { return node_->binder; }
  const Comp& cont() const { return node_->sub[0]; }
  const logic::Term& cond() const { return node_->term; }
  const Comp& then_branch() const { return node_->sub[0]; }
  const Comp& else_branch() const { return node_->sub[1]; }
  const logic::Term& bound() const { return node_->term2; }
  const Comp& body() const { return node_->sub[0]; }

  static Comp ret(logic::Term value);
  static Comp call(std::string op, logic::Term arg, std::string binder, Comp cont);
  static Comp ite(logic::Term cond, Comp then_c, Comp else_c);
  static Comp let_pure(std::string binder, logic::Term bound, Comp body);

  bool operator==(const Comp& o) const;

private:
  struct Node {
    Kind kind;
    logic::Term term = logic::Term::lit_unit();
    logic::Term term2 = logic::Term::lit_unit();
    std::string name;
    std::string binder;
    std::vector<Comp> sub;
  };
  explicit Comp(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// ret leaf for a term.
Comp comp_ret(const logic::Term& t);

// Grafts k at every ret leaf of m, substituting the leaf value for binder.
Comp comp_bind(const Comp& m, const std::string& binder, const Comp& k);

// Substitutes a term for a free program variable throughout a tree.
Comp comp_subst(const Comp& m, const std::string& var, const logic::Term& t);

// The generic effect of op at input i: call(op, i, o, ret o).
Comp gen_of_op(const OpDecl& op, const logic::Term& i);

// op applied with an explicit continuation, built as bind(gen i, binder. k);
// equal as a tree (after grafting) to call(op, i, binder, k).
Comp op_of_gen(const OpDecl& op, const logic::Term& i, const std::string& binder, const Comp& k);

// Checks typing: call binders get the op's output type, ite branches agree;
// returns the tree's result type.
logic::Ty comp_typecheck(const Comp& m, const Signature& sig);

std::set<std::string> comp_free_vars(const Comp& m);

} // namespace effver::effects

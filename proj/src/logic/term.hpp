#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "logic/ty.hpp"

namespace effver::logic {

struct Binder {
  std::string name;
  Ty ty;
};

// Simply-typed first-order terms. Every well-formed term has a unique type
// computable by typecheck(). div/mod evaluate to 0 on zero divisors; the
// corresponding guard is emitted separately by the VC generator.
class Term {
public:
  enum class Kind {
    Var,
    LitUnit,
    LitBool,
    LitInt,
    Pair,
    Proj,     // idx 1 or 2
    Inl,
    Inr,
    CaseSum,  // match t with inl x -> u | inr y -> v
    ListLit,  // canonical literal-list form; nil is the empty ListLit
    Cons,
    Append,
    Elem,     // boolean membership test
    EnumCtor,
    Arith,    // + - * div mod
    Cmp,      // = < <= <>
    BoolOp,   // and or not
    Ite,
    Apply,    // uninterpreted function applied to one argument
  };

  enum class ArithOp { Add, Sub, Mul, Div, Mod };
  enum class CmpOp { Eq, Lt, Le, Ne };
  enum class BoolK { And, Or, Not };

  Kind kind() const { return node_->kind; }

  const std::string& var_name() const { return node_->name; }
  const Ty& var_ty() const { return node_->ty; }
  bool lit_bool() const { return node_->b; }
  int64_t lit_int() const { return node_->i; }
  const Term& child(size_t i) const { return node_->sub[i]; }
  size_t arity() const { return node_->sub.size(); }
  int proj_index() const { return node_->tag; }
  const Ty& ann_ty() const { return node_->ty; } // Inl/Inr sum type, ListLit elem type, EnumCtor enum, Apply fn type
  const std::string& case_left_var() const { return node_->name; }
  const std::string& case_right_var() const { return node_->name2; }
  const std::string& ctor_name() const { return node_->name; }
  const std::string& fn_name() const { return node_->name; }
  ArithOp arith_op() const { return static_cast<ArithOp>(node_->tag); }
  CmpOp cmp_op() const { return static_cast<CmpOp>(node_->tag); }
  BoolK bool_op() const { return static_cast<BoolK>(node_->tag); }

  static Term var(std::string name, Ty ty);
  static Term lit_unit();
  static Term lit_boolean(bool b);
  static Term lit_integer(int64_t i);
  static Term pair(Term a, Term b);
  static Term proj(int idx, Term t);
  static Term inl(Term t, Ty sum_ty);
  static Term inr(Term t, Ty sum_ty);
  static Term case_sum(Term scrut, std::string lv, Term lbody, std::string rv, Term rbody);
  static Term list_lit(Ty elem_ty, std::vector<Term> items);
  static Term nil(Ty elem_ty) { return list_lit(std::move(elem_ty), {}); }
  static Term cons(Term head, Term tail);
  static Term append(Term a, Term b);
  static Term elem(Term x, Term l);
  static Term enum_ctor(Ty enum_ty, std::string ctor, std::vector<Term> args);
  static Term arith(ArithOp op, Term a, Term b);
  static Term cmp(CmpOp op, Term a, Term b);
  static Term band(Term a, Term b);
  static Term bor(Term a, Term b);
  static Term bnot(Term a);
  static Term ite(Term c, Term a, Term b);
  static Term apply(std::string fn, Ty fn_ty, Term arg);
  static Term tuple(const std::vector<Term>& parts);

  // Structural equality (names compared literally).
  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

  bool same_node(const Term& o) const { return node_ == o.node_; }

private:
  struct Node {
    Kind kind;
    std::vector<Term> sub;
    std::string name;
    std::string name2;
    Ty ty = Ty::unit();
    bool b = false;
    int64_t i = 0;
    int tag = 0;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

} // namespace effver::logic

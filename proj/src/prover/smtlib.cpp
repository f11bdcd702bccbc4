#include "prover/smtlib.hpp"

#include <set>
#include <sstream>

#include "logic/errors.hpp"
#include "logic/fresh.hpp"
#include "logic/subst.hpp"

namespace effver::prover {

using logic::Formula;
using logic::PredSig;
using logic::Term;
using logic::Ty;

namespace {

struct Emitter {
  std::ostringstream decls;
  std::set<std::string> declared_sorts;
  std::set<std::string> declared_syms;
  std::map<std::string, std::string> namemap; // internal name -> smt symbol
  int unique = 0;

  std::string symbol(const std::string& name) {
    auto it = namemap.find(name);
    if (it != namemap.end()) return it->second;
    std::string base = logic::display_base(name);
    std::string cand = base;
    while (declared_syms.count(cand)) cand = base + "!" + std::to_string(unique++);
    declared_syms.insert(cand);
    namemap[name] = cand;
    return cand;
  }

  std::string sort(const Ty& ty) {
    using K = Ty::Kind;
    switch (ty.kind()) {
      case K::Unit: {
        if (declared_sorts.insert("Unit").second)
          decls << "(declare-datatypes ((Unit 0)) (((mk-unit))))\n";
        return "Unit";
      }
      case K::Bool: return "Bool";
      case K::Int: return "Int";
      case K::Pair: {
        std::string a = sort(ty.fst());
        std::string b = sort(ty.snd());
        std::string name = "Pair_" + mangle(ty.fst()) + "_" + mangle(ty.snd());
        if (declared_sorts.insert(name).second)
          decls << "(declare-datatypes ((" << name << " 0)) (((mk-" << name << " (fst-"
                << name << " " << a << ") (snd-" << name << " " << b << ")))))\n";
        return name;
      }
      case K::Sum: {
        std::string a = sort(ty.left());
        std::string b = sort(ty.right());
        std::string name = "Sum_" + mangle(ty.left()) + "_" + mangle(ty.right());
        if (declared_sorts.insert(name).second)
          decls << "(declare-datatypes ((" << name << " 0)) (((inl-" << name << " (left-"
                << name << " " << a << ")) (inr-" << name << " (right-" << name << " " << b
                << ")))))\n";
        return name;
      }
      case K::List: {
        std::string e = sort(ty.elem());
        std::string name = "Lst_" + mangle(ty.elem());
        if (declared_sorts.insert(name).second) {
          decls << "(declare-datatypes ((" << name << " 0)) (((nil-" << name << ") (cons-"
                << name << " (head-" << name << " " << e << ") (tail-" << name << " " << name
                << ")))))\n";
          decls << "(define-fun-rec append-" << name << " ((a " << name << ") (b " << name
                << ")) " << name << " (ite ((_ is nil-" << name << ") a) b (cons-" << name
                << " (head-" << name << " a) (append-" << name << " (tail-" << name
                << " a) b))))\n";
          decls << "(define-fun-rec elem-" << name << " ((x " << e << ") (a " << name
                << ")) Bool (ite ((_ is nil-" << name << ") a) false (or (= x (head-" << name
                << " a)) (elem-" << name << " x (tail-" << name << " a)))))\n";
        }
        return name;
      }
      case K::Enum: {
        std::string name = "Enum_" + ty.enum_name();
        if (ty.ctors().empty()) {
          // the empty type: an uninterpreted sort with no values asserted;
          // quantifiers over it are eliminated before emission
          if (declared_sorts.insert(name).second)
            decls << "(declare-sort " << name << " 0)\n";
          return name;
        }
        if (declared_sorts.insert(name).second) {
          decls << "(declare-datatypes ((" << name << " 0)) ((";
          for (const auto& c : ty.ctors()) {
            decls << " (" << c.name;
            for (size_t i = 0; i < c.args.size(); ++i)
              decls << " (" << c.name << "-arg" << i << " " << sort(c.args[i]) << ")";
            decls << ")";
          }
          decls << ")))\n";
        }
        return name;
      }
      case K::Fn:
        throw UnsupportedShape("function-typed values have no SMT sort");
    }
    return "Int";
  }

  std::string mangle(const Ty& ty) {
    using K = Ty::Kind;
    switch (ty.kind()) {
      case K::Unit: return "u";
      case K::Bool: return "b";
      case K::Int: return "i";
      case K::Pair: return "P" + mangle(ty.fst()) + mangle(ty.snd());
      case K::Sum: return "S" + mangle(ty.left()) + mangle(ty.right());
      case K::List: return "L" + mangle(ty.elem());
      case K::Enum: return "E" + ty.enum_name();
      case K::Fn: return "F";
    }
    return "x";
  }

  std::string term(const Term& t, std::map<std::string, Ty>& tys) {
    using K = Term::Kind;
    std::ostringstream os;
    switch (t.kind()) {
      case K::Var: {
        tys.emplace(t.var_name(), t.var_ty());
        return symbol(t.var_name());
      }
      case K::LitUnit: {
        sort(Ty::unit());
        return "mk-unit";
      }
      case K::LitBool: return t.lit_bool() ? "true" : "false";
      case K::LitInt: {
        if (t.lit_int() < 0) return "(- " + std::to_string(-t.lit_int()) + ")";
        return std::to_string(t.lit_int());
      }
      case K::Pair: {
        Ty ty = logic::typecheck(t);
        std::string s = sort(ty);
        os << "(mk-" << s << " " << term(t.child(0), tys) << " " << term(t.child(1), tys)
           << ")";
        return os.str();
      }
      case K::Proj: {
        Ty ty = logic::typecheck(t.child(0));
        std::string s = sort(ty);
        os << "(" << (t.proj_index() == 1 ? "fst-" : "snd-") << s << " "
           << term(t.child(0), tys) << ")";
        return os.str();
      }
      case K::Inl:
      case K::Inr: {
        std::string s = sort(t.ann_ty());
        os << "(" << (t.kind() == K::Inl ? "inl-" : "inr-") << s << " "
           << term(t.child(0), tys) << ")";
        return os.str();
      }
      case K::CaseSum: {
        Ty sc = logic::typecheck(t.child(0));
        std::string s = sort(sc);
        std::string scrut = term(t.child(0), tys);
        std::map<std::string, Ty> tys2 = tys;
        tys2.emplace(t.case_left_var(), sc.left());
        tys2.emplace(t.case_right_var(), sc.right());
        os << "(ite ((_ is inl-" << s << ") " << scrut << ") (let ((" << symbol(t.case_left_var())
           << " (left-" << s << " " << scrut << "))) " << term(t.child(1), tys2)
           << ") (let ((" << symbol(t.case_right_var()) << " (right-" << s << " " << scrut
           << "))) " << term(t.child(2), tys2) << "))";
        return os.str();
      }
      case K::ListLit: {
        std::string s = sort(Ty::list(t.ann_ty()));
        std::string acc = "nil-" + s;
        for (size_t i = t.arity(); i-- > 0;)
          acc = "(cons-" + s + " " + term(t.child(i), tys) + " " + acc + ")";
        return acc;
      }
      case K::Cons: {
        Ty ty = logic::typecheck(t);
        std::string s = sort(ty);
        os << "(cons-" << s << " " << term(t.child(0), tys) << " " << term(t.child(1), tys)
           << ")";
        return os.str();
      }
      case K::Append: {
        Ty ty = logic::typecheck(t);
        std::string s = sort(ty);
        os << "(append-" << s << " " << term(t.child(0), tys) << " "
           << term(t.child(1), tys) << ")";
        return os.str();
      }
      case K::Elem: {
        Ty ty = logic::typecheck(t.child(1));
        std::string s = sort(ty);
        os << "(elem-" << s << " " << term(t.child(0), tys) << " " << term(t.child(1), tys)
           << ")";
        return os.str();
      }
      case K::EnumCtor: {
        sort(t.ann_ty());
        if (t.arity() == 0) return t.ctor_name();
        os << "(" << t.ctor_name();
        for (size_t i = 0; i < t.arity(); ++i) os << " " << term(t.child(i), tys);
        os << ")";
        return os.str();
      }
      case K::Arith: {
        const char* op = "+";
        switch (t.arith_op()) {
          case Term::ArithOp::Add: op = "+"; break;
          case Term::ArithOp::Sub: op = "-"; break;
          case Term::ArithOp::Mul: op = "*"; break;
          case Term::ArithOp::Div: op = "safediv"; ensure_safediv(); break;
          case Term::ArithOp::Mod: op = "safemod"; ensure_safediv(); break;
        }
        os << "(" << op << " " << term(t.child(0), tys) << " " << term(t.child(1), tys)
           << ")";
        return os.str();
      }
      case K::Cmp: {
        std::string a = term(t.child(0), tys);
        std::string b = term(t.child(1), tys);
        switch (t.cmp_op()) {
          case Term::CmpOp::Eq: return "(= " + a + " " + b + ")";
          case Term::CmpOp::Ne: return "(not (= " + a + " " + b + "))";
          case Term::CmpOp::Lt: return "(< " + a + " " + b + ")";
          case Term::CmpOp::Le: return "(<= " + a + " " + b + ")";
        }
        return "";
      }
      case K::BoolOp: {
        if (t.bool_op() == Term::BoolK::Not)
          return "(not " + term(t.child(0), tys) + ")";
        return std::string("(") + (t.bool_op() == Term::BoolK::And ? "and" : "or") + " " +
               term(t.child(0), tys) + " " + term(t.child(1), tys) + ")";
      }
      case K::Ite:
        os << "(ite " << term(t.child(0), tys) << " " << term(t.child(1), tys) << " "
           << term(t.child(2), tys) << ")";
        return os.str();
      case K::Apply: {
        fns.emplace(t.fn_name(), t.ann_ty());
        os << "(" << symbol(t.fn_name()) << " " << term(t.child(0), tys) << ")";
        return os.str();
      }
    }
    return "";
  }

  void ensure_safediv() {
    if (declared_sorts.insert("safediv").second) {
      decls << "(define-fun safediv ((a Int) (b Int)) Int (ite (= b 0) 0 (div a b)))\n";
      decls << "(define-fun safemod ((a Int) (b Int)) Int (ite (= b 0) 0 (mod a b)))\n";
    }
  }

  std::map<std::string, Ty> fns;
  PredSig preds;

  std::string formula(const Formula& fm, std::map<std::string, Ty>& tys, bool positive) {
    using K = Formula::Kind;
    std::ostringstream os;
    switch (fm.kind()) {
      case K::Top: return "true";
      case K::Bot: return "false";
      case K::And:
        os << "(and " << formula(fm.child(0), tys, positive) << " "
           << formula(fm.child(1), tys, positive) << ")";
        return os.str();
      case K::Or:
        os << "(or " << formula(fm.child(0), tys, positive) << " "
           << formula(fm.child(1), tys, positive) << ")";
        return os.str();
      case K::Imp:
        os << "(=> " << formula(fm.child(0), tys, !positive) << " "
           << formula(fm.child(1), tys, positive) << ")";
        return os.str();
      case K::Not:
        os << "(not " << formula(fm.child(0), tys, !positive) << ")";
        return os.str();
      case K::TermAtom:
        return term(fm.term(0), tys);
      case K::Eq:
        return "(= " + term(fm.term(0), tys) + " " + term(fm.term(1), tys) + ")";
      case K::Forall:
      case K::Exists: {
        if (fm.qty().is_empty_enum())
          return fm.kind() == K::Forall ? "true" : "false";
        std::map<std::string, Ty> tys2 = tys;
        tys2.emplace(fm.qvar(), fm.qty());
        std::string s = sort(fm.qty());
        os << "(" << (fm.kind() == K::Forall ? "forall" : "exists") << " (("
           << symbol(fm.qvar()) << " " << s << ")) " << formula(fm.child(0), tys2, positive)
           << ")";
        return os.str();
      }
      case K::PApply: {
        os << "(" << symbol(fm.pvar());
        for (const auto& t : fm.terms()) os << " " << term(t, tys);
        os << ")";
        return os.str();
      }
      case K::PLamRedex:
        throw UnsupportedShape("unreduced predicate redex; normalize before emission");
      case K::PForall: {
        if (!positive)
          throw UnsupportedShape(
              "predicate quantifier in negative position has no first-order encoding");
        // hoist: treat the bound predicate as a fresh uninterpreted function
        preds.emplace(fm.pvar(), fm.pforall_args());
        return formula(fm.child(0), tys, positive);
      }
    }
    return "true";
  }
};

} // namespace

std::string emit_smtlib(const Formula& f, const logic::DomainConfig& dom,
                        const PredSig& pred_sig, const std::map<std::string, Ty>& fn_tys) {
  (void)dom;
  Emitter em;
  em.preds = pred_sig;
  for (const auto& [n, t] : fn_tys) em.fns.emplace(n, t);
  std::map<std::string, Ty> tys;
  std::string body = em.formula(f, tys, true);

  // free term variables become constants, free predicates and functions
  // uninterpreted symbols; building these may add datatype declarations
  std::ostringstream sym;
  for (const auto& [name, args] : em.preds) {
    sym << "(declare-fun " << em.symbol(name) << " (";
    for (size_t i = 0; i < args.size(); ++i) sym << (i ? " " : "") << em.sort(args[i]);
    sym << ") Bool)\n";
  }
  for (const auto& [name, fnty] : em.fns) {
    sym << "(declare-fun " << em.symbol(name) << " (" << em.sort(fnty.dom()) << ") "
        << em.sort(fnty.cod()) << ")\n";
  }
  for (const auto& [name, ty] : tys) {
    sym << "(declare-const " << em.symbol(name) << " " << em.sort(ty) << ")\n";
  }

  std::ostringstream out;
  out << "; validity query: unsat <=> the asserted negation is impossible\n";
  out << "(set-logic UFDTNIA)\n";
  out << em.decls.str();
  out << sym.str();
  out << "(assert (not " << body << "))\n";
  out << "(check-sat)\n";
  return out.str();
}

} // namespace effver::prover

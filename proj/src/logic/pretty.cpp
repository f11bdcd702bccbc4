#include "logic/pretty.hpp"

#include <sstream>

#include "logic/fresh.hpp"
#include "logic/subst.hpp"

namespace effver::logic {

namespace {

std::string paren_if(bool cond, const std::string& s) { return cond ? "(" + s + ")" : s; }

// Flattens right-nested pairs for tuple display.
void flatten_tuple(const Term& t, std::vector<Term>& out) {
  if (t.kind() == Term::Kind::Pair) {
    out.push_back(t.child(0));
    flatten_tuple(t.child(1), out);
  } else {
    out.push_back(t);
  }
}

} // namespace

void Printer::reserve_free(const Formula& f) {
  for (const auto& v : free_term_vars(f)) intro(v), void();
  for (const auto& p : free_pred_vars(f)) intro(p), void();
}

void Printer::reserve_free(const Term& t) {
  for (const auto& v : free_term_vars(t)) intro(v), void();
}

std::string Printer::intro(const std::string& name) {
  auto it = display_.find(name);
  if (it != display_.end()) {
    ++active_[it->second];
    return it->second;
  }
  std::string base = display_base(name);
  std::string cand = base;
  while (active_.count(cand) && active_[cand] > 0) cand += "'";
  display_[name] = cand;
  ++active_[cand];
  return cand;
}

void Printer::retire(const std::string& name) {
  auto it = display_.find(name);
  if (it == display_.end()) return;
  if (--active_[it->second] <= 0) active_.erase(it->second);
  display_.erase(it);
}

std::string Printer::display_of(const std::string& name) {
  auto it = display_.find(name);
  if (it != display_.end()) return it->second;
  return display_base(name);
}

// Term precedence levels:
//   0 lowest (if/match), 1 ||, 2 &&, 3 not, 4 comparisons, 5 ++,
//   6 + -, 7 * / %, 8 application, 9 atoms
std::string Printer::term(const Term& t, int prec) {
  using K = Term::Kind;
  std::ostringstream os;
  switch (t.kind()) {
    case K::Var: return display_of(t.var_name());
    case K::LitUnit: return "()";
    case K::LitBool: return t.lit_bool() ? "true" : "false";
    case K::LitInt: {
      if (t.lit_int() < 0) return paren_if(prec >= 8, std::to_string(t.lit_int()));
      return std::to_string(t.lit_int());
    }
    case K::Pair: {
      std::vector<Term> parts;
      flatten_tuple(t, parts);
      os << "(";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ", ";
        os << term(parts[i], 0);
      }
      os << ")";
      return os.str();
    }
    case K::Proj:
      os << (t.proj_index() == 1 ? "fst " : "snd ") << term(t.child(0), 9);
      return paren_if(prec > 8, os.str());
    case K::Inl:
      os << "inl " << term(t.child(0), 9);
      return paren_if(prec > 8, os.str());
    case K::Inr:
      os << "inr " << term(t.child(0), 9);
      return paren_if(prec > 8, os.str());
    case K::CaseSum: {
      std::string lv = intro(t.case_left_var());
      std::string lb = term(t.child(1), 0);
      retire(t.case_left_var());
      std::string rv = intro(t.case_right_var());
      std::string rb = term(t.child(2), 0);
      retire(t.case_right_var());
      os << "match " << term(t.child(0), 0) << " with inl " << lv << " -> " << lb << " | inr "
         << rv << " -> " << rb;
      return paren_if(prec > 0, os.str());
    }
    case K::ListLit: {
      os << "[";
      for (size_t i = 0; i < t.arity(); ++i) {
        if (i) os << "; ";
        os << term(t.child(i), 0);
      }
      os << "]";
      return os.str();
    }
    case K::Cons:
      os << term(t.child(0), 6) << " :: " << term(t.child(1), 5);
      return paren_if(prec > 5, os.str());
    case K::Append:
      os << term(t.child(0), 6) << " ++ " << term(t.child(1), 5);
      return paren_if(prec > 5, os.str());
    case K::Elem:
      os << "elem " << term(t.child(0), 9) << " " << term(t.child(1), 9);
      return paren_if(prec > 8, os.str());
    case K::EnumCtor: {
      os << t.ctor_name();
      for (size_t i = 0; i < t.arity(); ++i) os << " " << term(t.child(i), 9);
      return paren_if(prec > 8 && t.arity() > 0, os.str());
    }
    case K::Arith: {
      const char* op = "+";
      int p = 6;
      switch (t.arith_op()) {
        case Term::ArithOp::Add: op = "+"; p = 6; break;
        case Term::ArithOp::Sub: op = "-"; p = 6; break;
        case Term::ArithOp::Mul: op = "*"; p = 7; break;
        case Term::ArithOp::Div: op = "/"; p = 7; break;
        case Term::ArithOp::Mod: op = "%"; p = 7; break;
      }
      os << term(t.child(0), p) << " " << op << " " << term(t.child(1), p + 1);
      return paren_if(prec > p, os.str());
    }
    case K::Cmp: {
      const char* op = "=";
      switch (t.cmp_op()) {
        case Term::CmpOp::Eq: op = "="; break;
        case Term::CmpOp::Lt: op = "<"; break;
        case Term::CmpOp::Le: op = "<="; break;
        case Term::CmpOp::Ne: op = "<>"; break;
      }
      os << term(t.child(0), 5) << " " << op << " " << term(t.child(1), 5);
      return paren_if(prec > 4, os.str());
    }
    case K::BoolOp: {
      if (t.bool_op() == Term::BoolK::Not) {
        os << "not " << term(t.child(0), 4);
        return paren_if(prec > 3, os.str());
      }
      bool isAnd = t.bool_op() == Term::BoolK::And;
      int p = isAnd ? 2 : 1;
      os << term(t.child(0), p) << (isAnd ? " && " : " || ") << term(t.child(1), p + 1);
      return paren_if(prec > p, os.str());
    }
    case K::Ite:
      os << "if " << term(t.child(0), 1) << " then " << term(t.child(1), 1) << " else "
         << term(t.child(2), 0);
      return paren_if(prec > 0, os.str());
    case K::Apply:
      os << display_of(t.fn_name()) << " " << term(t.child(0), 9);
      return paren_if(prec > 8, os.str());
  }
  return "?";
}

// Formula precedence: 0 quantifiers, 1 ==>, 2 \/, 3 /\, 4 ~, 5 atoms.
std::string Printer::formula(const Formula& f, int prec) {
  using K = Formula::Kind;
  std::ostringstream os;
  switch (f.kind()) {
    case K::Top: return "true";
    case K::Bot: return "false";
    case K::And:
      os << formula(f.child(0), 3) << " /\\ " << formula(f.child(1), 4);
      return paren_if(prec > 3, os.str());
    case K::Or:
      os << formula(f.child(0), 2) << " \\/ " << formula(f.child(1), 3);
      return paren_if(prec > 2, os.str());
    case K::Imp:
      os << formula(f.child(0), 2) << " ==> " << formula(f.child(1), 1);
      return paren_if(prec > 1, os.str());
    case K::Not:
      os << "~" << formula(f.child(0), 4);
      return paren_if(prec > 4, os.str());
    case K::TermAtom: {
      std::string s = term(f.term(0), 4);
      return s;
    }
    case K::Eq: {
      os << term(f.term(0), 5) << " = " << term(f.term(1), 5);
      return paren_if(prec > 4, os.str());
    }
    case K::Forall:
    case K::Exists: {
      bool isAll = f.kind() == K::Forall;
      // Coalesce runs of same-kind quantifiers over ints for compact output.
      std::string name = intro(f.qvar());
      os << (isAll ? "forall " : "exists ");
      if (f.qty() == Ty::integer())
        os << name;
      else
        os << "(" << name << ":" << f.qty().show() << ")";
      os << ". " << formula(f.child(0), 0);
      retire(f.qvar());
      return paren_if(prec > 0, os.str());
    }
    case K::PApply: {
      os << display_of(f.pvar());
      if (f.terms().empty()) return os.str();
      if (f.terms().size() == 1) {
        os << " " << term(f.terms()[0], 9);
      } else {
        os << " (";
        for (size_t i = 0; i < f.terms().size(); ++i) {
          if (i) os << ", ";
          os << term(f.terms()[i], 0);
        }
        os << ")";
      }
      return paren_if(prec > 4, os.str());
    }
    case K::PLamRedex: {
      os << "(fun (";
      std::vector<std::string> names;
      for (const auto& b : f.binders()) names.push_back(intro(b.name));
      for (size_t i = 0; i < names.size(); ++i) {
        if (i) os << ", ";
        os << names[i];
      }
      os << ") -> " << formula(f.child(0), 0) << ")";
      for (const auto& b : f.binders()) retire(b.name);
      os << " (";
      for (size_t i = 0; i < f.terms().size(); ++i) {
        if (i) os << ", ";
        os << term(f.terms()[i], 0);
      }
      os << ")";
      return os.str();
    }
    case K::PForall: {
      std::string name = intro(f.pvar());
      os << "forallP " << name << ":(";
      for (size_t i = 0; i < f.pforall_args().size(); ++i) {
        if (i) os << ", ";
        os << f.pforall_args()[i].show();
      }
      os << "). " << formula(f.child(0), 0);
      retire(f.pvar());
      return paren_if(prec > 0, os.str());
    }
  }
  return "?";
}

std::string show_term(const Term& t) {
  Printer p;
  p.reserve_free(t);
  return p.term(t, 0);
}

std::string show_formula(const Formula& f) {
  Printer p;
  p.reserve_free(f);
  return p.formula(f, 0);
}

} // namespace effver::logic

#include "specmonads/spec_expr.hpp"

#include <sstream>

#include "logic/errors.hpp"
#include "logic/fresh.hpp"
#include "logic/normalize.hpp"
#include "logic/pretty.hpp"
#include "logic/subst.hpp"

namespace effver::specm {

using logic::Formula;
using logic::Term;
using logic::Ty;

bool SpecShape::compatible(const SpecShape& o) const {
  if (contexts.size() != o.contexts.size()) return false;
  for (size_t i = 0; i < contexts.size(); ++i)
    if (!(contexts[i].ty == o.contexts[i].ty)) return false;
  if (posts.size() != o.posts.size()) return false;
  if (results.size() != o.results.size()) return false;
  return components == o.components && backward == o.backward;
}

bool SpecShape::operator==(const SpecShape& o) const {
  if (!compatible(o) || !(result == o.result)) return false;
  for (size_t i = 0; i < posts.size(); ++i) {
    if (posts[i].args.size() != o.posts[i].args.size()) return false;
    for (size_t j = 0; j < posts[i].args.size(); ++j)
      if (!(posts[i].args[j] == o.posts[i].args[j])) return false;
  }
  for (size_t i = 0; i < results.size(); ++i)
    if (!(results[i].ty == o.results[i].ty)) return false;
  return true;
}

std::string SpecShape::show() const {
  std::ostringstream os;
  os << name << "<" << result.show() << ">";
  return os.str();
}

namespace {

enum class Polarity { Pos, Neg, Both };

Polarity flip(Polarity p) {
  if (p == Polarity::Pos) return Polarity::Neg;
  if (p == Polarity::Neg) return Polarity::Pos;
  return Polarity::Both;
}

bool polarity_ok(const Formula& f, const std::string& pvar, Polarity pol) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top:
    case K::Bot:
    case K::TermAtom:
    case K::Eq:
      return true;
    case K::And:
    case K::Or:
      return polarity_ok(f.child(0), pvar, pol) && polarity_ok(f.child(1), pvar, pol);
    case K::Imp:
      return polarity_ok(f.child(0), pvar, flip(pol)) && polarity_ok(f.child(1), pvar, pol);
    case K::Not:
      return polarity_ok(f.child(0), pvar, flip(pol));
    case K::Forall:
    case K::Exists:
      return polarity_ok(f.child(0), pvar, pol);
    case K::PApply:
      if (f.pvar() != pvar) return true;
      return pol == Polarity::Pos;
    case K::PLamRedex:
      return polarity_ok(f.child(0), pvar, pol);
    case K::PForall:
      if (f.pvar() == pvar) return true; // shadowed
      return polarity_ok(f.child(0), pvar, pol);
  }
  return true;
}

} // namespace

bool positive_in(const Formula& f, const std::string& pvar) {
  return polarity_ok(f, pvar, Polarity::Pos);
}

void check_spec(const SpecExpr& w) {
  if (w.posts.size() != w.shape.posts.size() || w.contexts.size() != w.shape.contexts.size() ||
      w.results.size() != w.shape.results.size() ||
      w.bodies.size() != size_t(w.shape.components))
    throw ShapeMismatch("spec binder lists do not match shape " + w.shape.show());
  logic::PredSig sig;
  for (size_t i = 0; i < w.posts.size(); ++i) sig[w.posts[i]] = w.shape.posts[i].args;
  for (const auto& body : w.bodies) {
    for (const auto& p : logic::free_pred_vars(body))
      if (!sig.count(p))
        throw ShapeMismatch("predicate variable " + p + " is not a post binder of " +
                            w.shape.show());
    for (const auto& pn : w.posts)
      if (!positive_in(body, pn))
        throw ShapeMismatch("post variable " + pn + " occurs negatively");
  }
}

SpecExpr normalize_spec(const SpecExpr& w) {
  SpecExpr out = w;
  for (auto& b : out.bodies) b = logic::normalize(b);
  return out;
}

bool spec_alpha_equal(const SpecExpr& a, const SpecExpr& b) {
  if (!a.shape.compatible(b.shape)) return false;
  if (a.bodies.size() != b.bodies.size()) return false;
  for (size_t i = 0; i < a.bodies.size(); ++i) {
    Formula fa = a.bodies[i];
    Formula fb = b.bodies[i];
    // Rename b's binders to a's, then compare alpha-equality of the rest.
    for (size_t j = 0; j < a.posts.size(); ++j)
      fb = logic::rename_pred(fb, b.posts[j], a.posts[j]);
    std::map<std::string, Term> repl;
    for (size_t j = 0; j < a.contexts.size(); ++j)
      repl.emplace(b.contexts[j], Term::var(a.contexts[j], a.shape.contexts[j].ty));
    for (size_t j = 0; j < a.results.size(); ++j)
      repl.emplace(b.results[j], Term::var(a.results[j], a.shape.results[j].ty));
    fb = logic::subst_formula_many(fb, repl);
    if (!logic::alpha_equal(fa, fb)) return false;
  }
  return true;
}

SpecExpr refresh_spec(const SpecExpr& w) {
  SpecExpr out = w;
  std::map<std::string, Term> repl;
  for (size_t i = 0; i < out.posts.size(); ++i) {
    std::string np = logic::fresh_name(w.shape.posts[i].hint);
    for (auto& b : out.bodies) b = logic::rename_pred(b, out.posts[i], np);
    out.posts[i] = np;
  }
  for (size_t i = 0; i < out.contexts.size(); ++i) {
    std::string nc = logic::fresh_name(w.shape.contexts[i].name);
    repl.emplace(out.contexts[i], Term::var(nc, w.shape.contexts[i].ty));
    out.contexts[i] = nc;
  }
  for (size_t i = 0; i < out.results.size(); ++i) {
    std::string nr = logic::fresh_name(w.shape.results[i].name);
    repl.emplace(out.results[i], Term::var(nr, w.shape.results[i].ty));
    out.results[i] = nr;
  }
  if (!repl.empty())
    for (auto& b : out.bodies) b = logic::subst_formula_many(b, repl);
  return out;
}

std::string show_spec(const SpecExpr& w) {
  std::ostringstream os;
  logic::Printer pr;
  for (const auto& b : w.bodies) pr.reserve_free(b);
  if (w.shape.components == 2) {
    // pre/post pair
    os << "requires ";
    for (const auto& c : w.contexts) pr.intro(c);
    os << pr.formula(w.bodies[0], 0) << " ensures ";
    std::vector<std::string> rs;
    for (const auto& r : w.results) rs.push_back(pr.intro(r));
    if (rs.size() == 1) {
      os << rs[0];
    } else {
      os << "(";
      for (size_t i = 0; i < rs.size(); ++i) os << (i ? ", " : "") << rs[i];
      os << ")";
    }
    os << ". " << pr.formula(w.bodies[1], 0);
    return os.str();
  }
  os << "fun";
  std::vector<std::string> names;
  for (const auto& p : w.posts) names.push_back(pr.intro(p));
  for (const auto& c : w.contexts) names.push_back(pr.intro(c));
  for (const auto& r : w.results) names.push_back(pr.intro(r));
  for (const auto& n : names) os << " " << n;
  os << " -> " << pr.formula(w.bodies[0], 0);
  return os.str();
}

} // namespace effver::specm

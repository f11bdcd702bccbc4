#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>

#include "logic/formula.hpp"

namespace effver::logic {

std::set<std::string> free_term_vars(const Term& t);
std::set<std::string> free_term_vars(const Formula& f);
// Free predicate variables (PApply heads not bound by an enclosing PForall).
std::set<std::string> free_pred_vars(const Formula& f);
// Names of uninterpreted functions applied anywhere in the term/formula.
void collect_fn_apps(const Term& t, std::map<std::string, Ty>& out);
void collect_fn_apps(const Formula& f, std::map<std::string, Ty>& out);

// Capture-avoiding substitution of a term for a free term variable.
Term subst_term(const Term& t, const std::string& var, const Term& replacement);
Formula subst_formula(const Formula& f, const std::string& var, const Term& replacement);

// Simultaneous capture-avoiding substitution.
Formula subst_formula_many(const Formula& f, const std::map<std::string, Term>& repl);
Term subst_term_many(const Term& t, const std::map<std::string, Term>& repl);

// Replaces every application of predicate variable `pvar` by a beta-redex of
// `abs` at the application's arguments. Capture-avoiding in the term
// variables free in `abs`.
Formula subst_pred(const Formula& f, const std::string& pvar, const PredAbs& abs);

// Renames a free predicate variable.
Formula rename_pred(const Formula& f, const std::string& from, const std::string& to);

// Replaces each application of `pvar` by a formula computed from the
// application's argument terms. The returned formulas' free variables must
// not collide with binders enclosing the application sites; globally fresh
// binder names make that hold throughout this codebase.
Formula subst_pred_fn(const Formula& f, const std::string& pvar,
                      const std::function<Formula(const std::vector<Term>&)>& fn);

// Alpha-equivalence (term binders, redex binders and PForall binders may
// differ; free names must agree).
bool alpha_equal(const Formula& a, const Formula& b);

} // namespace effver::logic

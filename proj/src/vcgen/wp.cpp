#include "vcgen/wp.hpp"

#include "logic/normalize.hpp"
#include "logic/typecheck.hpp"
#include "logic/subst.hpp"

namespace effver::vcgen {

using effects::Comp;
using logic::Binder;
using logic::Formula;
using logic::Term;
using logic::Ty;
using specm::SpecExpr;

namespace {

// Collects divisor-nonzero conditions from a term, each wrapped in the
// current path condition and closed under binders in scope.
void div_guards(const Term& t, const Formula& path, const std::vector<Binder>& scope,
                const std::string& where, std::vector<SideCondition>& out) {
  if (t.kind() == Term::Kind::Arith &&
      (t.arith_op() == Term::ArithOp::Div || t.arith_op() == Term::ArithOp::Mod)) {
    Formula guard =
        Formula::atom(Term::cmp(Term::CmpOp::Ne, t.child(1), Term::lit_integer(0)));
    Formula cond = Formula::impl(path, guard);
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      cond = Formula::forall(it->name, it->ty, cond);
    out.push_back({logic::normalize(cond), where});
  }
  for (size_t i = 0; i < t.arity(); ++i) div_guards(t.child(i), path, scope, where, out);
}

struct Fold {
  const obs::Observation& o;
  std::vector<SideCondition> sides;
  std::vector<Binder> scope;

  SpecExpr go(const Comp& m, const Formula& path) {
    switch (m.kind()) {
      case Comp::Kind::Ret: {
        div_guards(m.ret_value(), path, scope, "return value", sides);
        return o.target.ret(m.ret_value());
      }
      case Comp::Kind::Call: {
        div_guards(m.arg(), path, scope, "argument of " + m.op(), sides);
        const effects::OpDecl* decl = o.sig.find(m.op());
        Ty outTy = decl ? decl->output : Ty::unit();
        scope.push_back({m.binder(), outTy});
        SpecExpr cont = go(m.cont(), path);
        scope.pop_back();
        return o.rule(m.op(), m.arg(), m.binder(), cont);
      }
      case Comp::Kind::Ite: {
        div_guards(m.cond(), path, scope, "branch condition", sides);
        Formula c = Formula::atom(m.cond());
        SpecExpr wt = go(m.then_branch(), Formula::conj(path, c));
        SpecExpr we = go(m.else_branch(), Formula::conj(path, Formula::neg(c)));
        // conditional split: (c ==> then) /\ (~c ==> else), on unified binders
        SpecExpr out = wt;
        Formula eb = we.bodies[0];
        for (size_t i = 0; i < out.posts.size(); ++i)
          eb = logic::rename_pred(eb, we.posts[i], out.posts[i]);
        std::map<std::string, Term> repl;
        for (size_t i = 0; i < out.contexts.size(); ++i)
          repl.emplace(we.contexts[i],
                       Term::var(out.contexts[i], out.shape.contexts[i].ty));
        if (!repl.empty()) eb = logic::subst_formula_many(eb, repl);
        out.bodies[0] = Formula::conj(Formula::impl(c, out.bodies[0]),
                                      Formula::impl(Formula::neg(c), eb));
        return out;
      }
      case Comp::Kind::Let: {
        div_guards(m.bound(), path, scope, "let binding", sides);
        scope.push_back({m.binder(), logic::typecheck(m.bound())});
        SpecExpr body = go(m.body(), path);
        scope.pop_back();
        SpecExpr out = body;
        for (auto& b : out.bodies) b = logic::subst_formula(b, m.binder(), m.bound());
        return out;
      }
    }
    return o.target.ret(Term::lit_unit());
  }
};

} // namespace

WpResult wp(const Comp& m, const obs::Observation& o) {
  Fold fold{o, {}, {}};
  SpecExpr spec = fold.go(m, Formula::top());
  return WpResult{specm::normalize_spec(spec), std::move(fold.sides)};
}

} // namespace effver::vcgen

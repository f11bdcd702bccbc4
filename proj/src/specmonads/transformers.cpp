#include "specmonads/transformers.hpp"

#include "logic/errors.hpp"
#include "logic/fresh.hpp"
#include "logic/subst.hpp"
#include "logic/typecheck.hpp"

namespace effver::specm {

using logic::Binder;
using logic::Formula;
using logic::fresh_name;
using logic::Term;
using logic::Ty;

Transformer state_t(Ty s) { return Transformer{Transformer::Kind::State, std::move(s)}; }
Transformer exception_t(Ty e) { return Transformer{Transformer::Kind::Exception, std::move(e)}; }
Transformer update_t() { return Transformer{Transformer::Kind::Update, Ty::list(Ty::event())}; }

namespace {

void require_backward(const SpecMonadDescriptor& base) {
  SpecShape probe = base.shape_of(Ty::unit());
  if (!probe.backward || probe.components != 1 || !probe.results.empty())
    throw ShapeMismatch("transformer base must be a backward transformer monad, got " +
                        base.name);
}

// Views a transformed spec (с extra trailing context) as a base spec.
SpecExpr strip_ctx(const SpecExpr& w, const SpecMonadDescriptor& base, const Ty& inner) {
  SpecExpr out = w;
  out.shape = base.shape_of(inner);
  out.contexts.pop_back();
  return out;
}

} // namespace

SpecMonadDescriptor apply_transformer(const Transformer& tr, const SpecMonadDescriptor& base) {
  require_backward(base);
  SpecMonadDescriptor d;
  const Ty param = tr.param;

  switch (tr.kind) {
    case Transformer::Kind::State: {
      d.name = "stT(" + base.name + ")";
      std::string dname = d.name;
      d.shape_of = [base, param, dname](const Ty& a) {
        SpecShape s = base.shape_of(Ty::pair(a, param));
        s.name = dname;
        s.result = a;
        s.contexts.push_back({"s0", param});
        return s;
      };
      auto shape_of = d.shape_of;
      d.ret = [base, param, shape_of](const Term& v) {
        Ty a = logic::typecheck(v);
        std::string s0 = fresh_name("s0");
        SpecExpr inner = base.ret(Term::pair(v, Term::var(s0, param)));
        SpecExpr out = inner;
        out.shape = shape_of(a);
        out.contexts.push_back(s0);
        return out;
      };
      d.bind = [base, param, shape_of](const SpecExpr& w, const std::string& binder,
                                       const SpecExpr& f) {
        Ty a = w.shape.result;
        Ty b = f.shape.result;
        std::string s0 = fresh_name("s0");
        std::string wS = w.contexts.back();
        std::string fS = f.contexts.back();
        // k: the continuation as a base spec over pair(b, S), parameterized
        // by the pair binder y
        std::string y = fresh_name("y");
        Term yv = Term::var(y, Ty::pair(a, param));
        SpecExpr k = strip_ctx(f, base, Ty::pair(b, param));
        k.bodies[0] = logic::subst_formula_many(
            k.bodies[0], {{binder, Term::proj(1, yv)}, {fS, Term::proj(2, yv)}});
        SpecExpr wBase = strip_ctx(w, base, Ty::pair(a, param));
        SpecExpr out = base.bind(wBase, y, k);
        out.bodies[0] = logic::subst_formula(out.bodies[0], wS, Term::var(s0, param));
        out.shape = shape_of(b);
        out.contexts.push_back(s0);
        return out;
      };
      break;
    }
    case Transformer::Kind::Exception: {
      d.name = "excT(" + base.name + ")";
      std::string dname = d.name;
      d.shape_of = [base, param, dname](const Ty& a) {
        SpecShape s = base.shape_of(Ty::sum(a, param));
        s.name = dname;
        s.result = a;
        return s;
      };
      auto shape_of = d.shape_of;
      d.ret = [base, param, shape_of](const Term& v) {
        Ty a = logic::typecheck(v);
        SpecExpr inner = base.ret(Term::inl(v, Ty::sum(a, param)));
        inner.shape = shape_of(a);
        return inner;
      };
      d.bind = [base, param, shape_of](const SpecExpr& w, const std::string& binder,
                                       const SpecExpr& f) {
        Ty a = w.shape.result;
        Ty b = f.shape.result;
        Ty sumB = Ty::sum(b, param);
        std::string y = fresh_name("y");
        Term yv = Term::var(y, Ty::sum(a, param));
        // case split: left values continue with f, right ones are returned
        std::string av = fresh_name("a");
        std::string ev = fresh_name("e");
        SpecExpr fBase = f;
        fBase.shape = base.shape_of(sumB);
        Formula leftB = logic::subst_formula(fBase.bodies[0], binder, Term::var(av, a));
        SpecExpr retR = base.ret(Term::inr(Term::var(ev, param), sumB));
        Formula rightB = retR.bodies[0];
        for (size_t i = 0; i < retR.posts.size(); ++i)
          rightB = logic::rename_pred(rightB, retR.posts[i], fBase.posts[i]);
        std::map<std::string, Term> repl;
        for (size_t i = 0; i < retR.contexts.size(); ++i)
          repl.emplace(retR.contexts[i], Term::var(fBase.contexts[i],
                                                   fBase.shape.contexts[i].ty));
        if (!repl.empty()) rightB = logic::subst_formula_many(rightB, repl);
        Formula body = Formula::conj(
            Formula::forall(av, a,
                            Formula::impl(Formula::eq(yv, Term::inl(Term::var(av, a),
                                                                    Ty::sum(a, param))),
                                          leftB)),
            Formula::forall(ev, param,
                            Formula::impl(Formula::eq(yv, Term::inr(Term::var(ev, param),
                                                                    Ty::sum(a, param))),
                                          rightB)));
        SpecExpr k = fBase;
        k.bodies[0] = body;
        SpecExpr wBase = w;
        wBase.shape = base.shape_of(Ty::sum(a, param));
        SpecExpr out = base.bind(wBase, y, k);
        out.shape = shape_of(b);
        return out;
      };
      break;
    }
    case Transformer::Kind::Update: {
      d.name = "updT(" + base.name + ")";
      std::string dname = d.name;
      const Ty evl = param; // list(event)
      d.shape_of = [base, evl, dname](const Ty& a) {
        SpecShape s = base.shape_of(Ty::pair(a, evl));
        s.name = dname;
        s.result = a;
        s.contexts.push_back({"h", evl});
        return s;
      };
      auto shape_of = d.shape_of;
      d.ret = [base, evl, shape_of](const Term& v) {
        Ty a = logic::typecheck(v);
        std::string h = fresh_name("h");
        SpecExpr inner = base.ret(Term::pair(v, Term::list_lit(Ty::event(), {})));
        inner.shape = shape_of(a);
        inner.contexts.push_back(h);
        return inner;
      };
      d.bind = [base, evl, shape_of](const SpecExpr& w, const std::string& binder,
                                     const SpecExpr& f) {
        Ty a = w.shape.result;
        Ty b = f.shape.result;
        Ty pairB = Ty::pair(b, evl);
        std::string h0 = fresh_name("h");
        std::string wH = w.contexts.back();
        std::string fH = f.contexts.back();
        std::string y = fresh_name("y");
        Term yv = Term::var(y, Ty::pair(a, evl));
        // continuation as a base spec over pair(b, list event): its history
        // context extends by the produced events, and its own post
        // applications re-route through the final post with concatenation.
        SpecExpr k = strip_ctx(f, base, pairB);
        k.bodies[0] = logic::subst_formula_many(
            k.bodies[0],
            {{binder, Term::proj(1, yv)},
             {fH, Term::append(Term::var(h0, evl), Term::proj(2, yv))}});
        const auto baseArgs = base.shape_of(pairB).posts[0].args;
        std::string kp = k.posts[0];
        std::string z = fresh_name("z");
        std::vector<Binder> absBinders = {{z, pairB}};
        std::vector<Term> passthrough;
        for (size_t i = 1; i < baseArgs.size(); ++i) {
          std::string extra = fresh_name("c");
          absBinders.push_back({extra, baseArgs[i]});
          passthrough.push_back(Term::var(extra, baseArgs[i]));
        }
        std::string kp2 = fresh_name("p");
        Term zv = Term::var(z, pairB);
        std::vector<Term> args = {
            Term::pair(Term::proj(1, zv),
                       Term::append(Term::proj(2, yv), Term::proj(2, zv)))};
        for (const auto& t : passthrough) args.push_back(t);
        k.bodies[0] = logic::subst_pred(
            k.bodies[0], kp,
            logic::make_abs(absBinders, Formula::papply(kp2, args)));
        k.bodies[0] = logic::rename_pred(k.bodies[0], kp2, kp);
        SpecExpr wBase = strip_ctx(w, base, Ty::pair(a, evl));
        SpecExpr out = base.bind(wBase, y, k);
        out.bodies[0] = logic::subst_formula(out.bodies[0], wH, Term::var(h0, evl));
        out.shape = shape_of(b);
        out.contexts.push_back(h0);
        return out;
      };
      break;
    }
  }

  auto shape_of = d.shape_of;
  std::string dname = d.name;
  d.leq = [shape_of, dname](const SpecExpr& w1, const SpecExpr& w2) {
    if (!shape_of(w1.shape.result).compatible(w1.shape) ||
        !shape_of(w2.shape.result).compatible(w2.shape) ||
        !(w1.shape.result == w2.shape.result))
      throw ShapeMismatch("leq: expected two " + dname + " specs");
    // pointwise backward order, like every transformer-derived monad
    Formula f1 = w1.bodies[0];
    Formula f2 = w2.bodies[0];
    std::vector<Binder> quant;
    for (size_t i = 0; i < w1.posts.size(); ++i) {
      std::string p = fresh_name(w1.shape.posts[i].hint);
      f1 = logic::rename_pred(f1, w1.posts[i], p);
      f2 = logic::rename_pred(f2, w2.posts[i], p);
    }
    for (size_t i = 0; i < w1.contexts.size(); ++i) {
      std::string v = fresh_name(w1.shape.contexts[i].name);
      f1 = logic::subst_formula(f1, w1.contexts[i], Term::var(v, w1.shape.contexts[i].ty));
      f2 = logic::subst_formula(f2, w2.contexts[i], Term::var(v, w2.shape.contexts[i].ty));
      quant.push_back({v, w1.shape.contexts[i].ty});
    }
    Formula impl = Formula::impl(f2, f1);
    for (auto it = quant.rbegin(); it != quant.rend(); ++it)
      impl = Formula::forall(it->name, it->ty, impl);
    return impl;
  };
  return d;
}

} // namespace effver::specm

#include "observations/rules.hpp"

#include "effects/signature.hpp"
#include "logic/errors.hpp"
#include "logic/fresh.hpp"
#include "logic/subst.hpp"
#include "specmonads/descriptors.hpp"

namespace effver::obs {

using effects::Signature;
using logic::Formula;
using logic::fresh_name;
using logic::Term;
using logic::Ty;
using specm::SpecExpr;
using specm::SpecMonadDescriptor;

namespace {

Ty event_list() { return Ty::list(Ty::event()); }

// Builds a backward spec with fresh binders whose body is produced from the
// post name and the context variables.
SpecExpr make_spec(const SpecMonadDescriptor& d, const Ty& result,
                   const std::function<Formula(const std::vector<std::string>& posts,
                                               const std::vector<Term>& ctx)>& body) {
  specm::SpecShape shape = d.shape_of(result);
  SpecExpr w;
  w.shape = shape;
  std::vector<Term> ctxTerms;
  for (const auto& p : shape.posts) w.posts.push_back(fresh_name(p.hint));
  for (const auto& c : shape.contexts) {
    w.contexts.push_back(fresh_name(c.name));
    ctxTerms.push_back(Term::var(w.contexts.back(), c.ty));
  }
  w.bodies = {body(w.posts, ctxTerms)};
  specm::check_spec(w);
  return w;
}

} // namespace

Observation theta_pure() {
  return Observation{"pure", effects::sig_pure(), specm::wpure(), {}};
}

Observation theta_st(const Ty& s) {
  Observation o;
  o.name = "st";
  o.sig = effects::sig_st(s);
  o.target = specm::wst(s);
  auto d = o.target;
  o.op_specs["get"] = [d, s](const Term&) {
    return make_spec(d, s, [](const auto& posts, const auto& ctx) {
      return Formula::papply(posts[0], {ctx[0], ctx[0]});
    });
  };
  o.op_specs["put"] = [d, s](const Term& i) {
    return make_spec(d, Ty::unit(), [&](const auto& posts, const auto&) {
      return Formula::papply(posts[0], {Term::lit_unit(), i});
    });
  };
  return o;
}

Observation theta_exc(const Ty& e) {
  Observation o;
  o.name = "exc";
  o.sig = effects::sig_exc(e);
  o.target = specm::wexc(e);
  auto d = o.target;
  o.op_specs["throw"] = [d](const Term& i) {
    return make_spec(d, Ty::empty(), [&](const auto& posts, const auto&) {
      return Formula::papply(posts[1], {i});
    });
  };
  return o;
}

Observation theta_from_exnmap(const Ty& e,
                              const std::function<Formula(const Term&)>& f) {
  Observation o;
  o.name = "exc-map";
  o.sig = effects::sig_exc(e);
  o.target = specm::wpure();
  auto d = o.target;
  o.op_specs["throw"] = [d, f](const Term& i) {
    return make_spec(d, Ty::empty(), [&](const auto&, const auto&) { return f(i); });
  };
  return o;
}

Observation theta_bot(const Ty& e) {
  Observation o = theta_from_exnmap(e, [](const Term&) { return Formula::bot(); });
  o.name = "exc-total";
  return o;
}

Observation theta_top(const Ty& e) {
  Observation o = theta_from_exnmap(e, [](const Term&) { return Formula::top(); });
  o.name = "exc-partial";
  return o;
}

namespace {
Observation theta_nd(bool demonic) {
  Observation o;
  o.name = demonic ? "nd-demonic" : "nd-angelic";
  o.sig = effects::sig_nd();
  o.target = specm::wpure();
  auto d = o.target;
  o.op_specs["choice"] = [d, demonic](const Term&) {
    return make_spec(d, Ty::boolean(), [&](const auto& posts, const auto&) {
      Formula t = Formula::papply(posts[0], {Term::lit_boolean(true)});
      Formula f = Formula::papply(posts[0], {Term::lit_boolean(false)});
      return demonic ? Formula::conj(t, f) : Formula::disj(t, f);
    });
  };
  o.op_specs["fail"] = [d, demonic](const Term&) {
    return make_spec(d, Ty::empty(), [&](const auto&, const auto&) {
      return demonic ? Formula::top() : Formula::bot();
    });
  };
  return o;
}
} // namespace

Observation theta_demonic() { return theta_nd(true); }
Observation theta_angelic() { return theta_nd(false); }

namespace {

Term singleton_event(const std::string& ctor, const Term& payload) {
  Ty ev = Ty::event();
  return Term::list_lit(ev, {Term::enum_ctor(ev, ctor, {payload})});
}

} // namespace

Observation theta_fr(const Ty& i, const Ty& o_ty) {
  Observation o;
  o.name = "io-free";
  o.sig = effects::sig_io(i, o_ty);
  o.target = specm::wfr();
  auto d = o.target;
  o.op_specs["read"] = [d, i](const Term&) {
    return make_spec(d, i, [&](const auto& posts, const auto&) {
      std::string iv = fresh_name("x");
      return Formula::forall(
          iv, i,
          Formula::papply(posts[0], {Term::var(iv, i),
                                     singleton_event("In", Term::var(iv, i))}));
    });
  };
  o.op_specs["write"] = [d](const Term& out) {
    return make_spec(d, Ty::unit(), [&](const auto& posts, const auto&) {
      return Formula::papply(posts[0], {Term::lit_unit(), singleton_event("Out", out)});
    });
  };
  return o;
}

Observation theta_hist(const Ty& i, const Ty& o_ty) {
  Observation o;
  o.name = "io-hist";
  o.sig = effects::sig_io(i, o_ty);
  o.target = specm::whist();
  auto d = o.target;
  o.op_specs["read"] = [d, i](const Term&) {
    return make_spec(d, i, [&](const auto& posts, const auto&) {
      std::string iv = fresh_name("x");
      return Formula::forall(
          iv, i,
          Formula::papply(posts[0], {Term::var(iv, i),
                                     singleton_event("In", Term::var(iv, i))}));
    });
  };
  o.op_specs["write"] = [d](const Term& out) {
    return make_spec(d, Ty::unit(), [&](const auto& posts, const auto&) {
      return Formula::papply(posts[0], {Term::lit_unit(), singleton_event("Out", out)});
    });
  };
  return o;
}

Observation theta_histst(const Ty& i, const Ty& o_ty) {
  Observation o;
  o.name = "io-histst";
  o.sig = effects::sig_io(i, o_ty);
  o.target = specm::whistst();
  auto d = o.target;
  Ty ev = Ty::event();
  o.op_specs["read"] = [d, i, ev](const Term&) {
    return make_spec(d, i, [&](const auto& posts, const auto& ctx) {
      std::string iv = fresh_name("x");
      Term cons = Term::cons(Term::enum_ctor(ev, "In", {Term::var(iv, i)}), ctx[0]);
      return Formula::forall(iv, i,
                             Formula::papply(posts[0], {Term::var(iv, i), cons}));
    });
  };
  o.op_specs["write"] = [d, ev](const Term& out) {
    return make_spec(d, Ty::unit(), [&](const auto& posts, const auto& ctx) {
      Term cons = Term::cons(Term::enum_ctor(ev, "Out", {out}), ctx[0]);
      return Formula::papply(posts[0], {Term::lit_unit(), cons});
    });
  };
  return o;
}

Observation theta_iost(const Ty& s, const Ty& i, const Ty& o_ty) {
  Observation o;
  o.name = "iost";
  o.sig = effects::sig_iost(s, i, o_ty);
  o.target = specm::wiost(s);
  auto d = o.target;
  o.op_specs["read"] = [d, i](const Term&) {
    return make_spec(d, i, [&](const auto& posts, const auto& ctx) {
      std::string iv = fresh_name("x");
      return Formula::forall(
          iv, i,
          Formula::papply(posts[0], {Term::var(iv, i), ctx[0],
                                     singleton_event("In", Term::var(iv, i))}));
    });
  };
  o.op_specs["write"] = [d](const Term& out) {
    return make_spec(d, Ty::unit(), [&](const auto& posts, const auto& ctx) {
      return Formula::papply(posts[0],
                             {Term::lit_unit(), ctx[0], singleton_event("Out", out)});
    });
  };
  o.op_specs["get"] = [d, s](const Term&) {
    return make_spec(d, s, [&](const auto& posts, const auto& ctx) {
      return Formula::papply(posts[0],
                             {ctx[0], ctx[0], Term::list_lit(Ty::event(), {})});
    });
  };
  o.op_specs["put"] = [d](const Term& in) {
    return make_spec(d, Ty::unit(), [&](const auto& posts, const auto&) {
      return Formula::papply(posts[0],
                             {Term::lit_unit(), in, Term::list_lit(Ty::event(), {})});
    });
  };
  return o;
}

Observation theta_from_contracts(const Signature& sig,
                                 const handlers::ContractSet& contracts) {
  Observation o;
  o.name = "contract(" + sig.name + ")";
  o.sig = sig;
  o.target = specm::wpure();
  auto d = o.target;
  for (const auto& op : sig.ops) {
    auto it = contracts.find(op.name);
    if (it == contracts.end())
      throw UnhandledOp("no contract for operation " + op.name);
    const handlers::OpContract c = it->second;
    Ty outTy = op.output;
    o.op_specs[op.name] = [d, c, outTy](const Term& input) {
      return make_spec(d, outTy, [&](const auto& posts, const auto&) {
        Formula pre = logic::subst_formula(c.pre, c.input_var, input);
        std::string ov = fresh_name("o");
        Term out = Term::var(ov, outTy);
        Formula post = logic::subst_formula(c.post, c.input_var, input);
        post = logic::subst_formula(post, c.output_var, out);
        return Formula::conj(
            pre, Formula::forall(ov, outTy,
                                 Formula::impl(post, Formula::papply(posts[0], {out}))));
      });
    };
  }
  return o;
}

} // namespace effver::obs

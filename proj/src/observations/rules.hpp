#pragma once

#include "handlers/contracts.hpp"
#include "observations/observation.hpp"

namespace effver::obs {

// Builtin effect observations. State, exception and io carrier types
// default to int where unspecified.

Observation theta_pure();
Observation theta_st(const logic::Ty& s);
Observation theta_exc(const logic::Ty& e);
Observation theta_bot(const logic::Ty& e);   // total correctness: throw maps to false
Observation theta_top(const logic::Ty& e);   // partial correctness: throw maps to true
// The general family: one proposition per exception value.
Observation theta_from_exnmap(const logic::Ty& e,
                              const std::function<logic::Formula(const logic::Term&)>& f);
Observation theta_demonic();
Observation theta_angelic();
Observation theta_fr(const logic::Ty& i = logic::Ty::integer(),
                     const logic::Ty& o = logic::Ty::integer());
Observation theta_hist(const logic::Ty& i = logic::Ty::integer(),
                       const logic::Ty& o = logic::Ty::integer());
Observation theta_histst(const logic::Ty& i = logic::Ty::integer(),
                         const logic::Ty& o = logic::Ty::integer());
Observation theta_iost(const logic::Ty& s, const logic::Ty& i = logic::Ty::integer(),
                       const logic::Ty& o = logic::Ty::integer());

// Free signatures with upfront operation contracts: the spec of each
// operation is fun p -> P(inp) /\ forall oup. Q(inp,oup) ==> p oup.
Observation theta_from_contracts(const effects::Signature& sig,
                                 const handlers::ContractSet& contracts);

} // namespace effver::obs

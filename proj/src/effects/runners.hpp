#pragma once

#include <set>

#include "effects/comp.hpp"
#include "logic/env.hpp"
#include "logic/value.hpp"

namespace effver::effects {

// Concrete interpreters, one per builtin signature. They are the brute-force
// oracles the symbolic layer is checked against.

struct StOutcome {
  logic::Value value;
  logic::Value state;
};

struct ExcOutcome {
  bool ok;            // inl when true
  logic::Value value; // result or exception payload
};

struct IOOutcome {
  logic::Value value;
  std::vector<logic::Value> events; // event-enum values, execution order
};

struct IOStOutcome {
  logic::Value value;
  logic::Value state;
  std::vector<logic::Value> events;
};

// env supplies free program variables and uninterpreted-function tables.
StOutcome run_state(const Comp& m, const logic::Value& s0, logic::Env& env);
ExcOutcome run_exc(const Comp& m, logic::Env& env);
std::set<logic::Value> run_nd(const Comp& m, logic::Env& env);
IOOutcome run_io(const Comp& m, const std::vector<logic::Value>& input, logic::Env& env);
IOStOutcome run_iost(const Comp& m, const logic::Value& s0,
                     const std::vector<logic::Value>& input, logic::Env& env);

// Pure trees (no operations at all).
logic::Value run_pure(const Comp& m, logic::Env& env);

} // namespace effver::effects

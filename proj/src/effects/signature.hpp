#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logic/ty.hpp"

namespace effver::effects {

// An algebraic operation op : I ~> O.
struct OpDecl {
  std::string name;
  logic::Ty input;
  logic::Ty output;
};

// An effect signature: a named list of operations, plus the carrier
// parameters fixed by the builtin signatures (state, exception, io types).
struct Signature {
  std::string name;
  std::vector<OpDecl> ops;
  std::optional<logic::Ty> state;         // St, IOSt
  std::optional<logic::Ty> exception;     // Exc
  std::optional<logic::Ty> input;         // IO
  std::optional<logic::Ty> output;        // IO

  const OpDecl* find(const std::string& op) const {
    for (const auto& o : ops)
      if (o.name == op) return &o;
    return nullptr;
  }
};

Signature sig_pure();
Signature sig_st(logic::Ty s);
Signature sig_exc(logic::Ty e);
Signature sig_nd();
Signature sig_io(logic::Ty i = logic::Ty::integer(), logic::Ty o = logic::Ty::integer());
Signature sig_iost(logic::Ty s, logic::Ty i = logic::Ty::integer(),
                   logic::Ty o = logic::Ty::integer());
// General recursion: one call operation, monomorphic per fix site.
Signature sig_genrec(logic::Ty a, logic::Ty b);
// A user-declared free signature.
Signature sig_free(std::string name, std::vector<OpDecl> ops);

} // namespace effver::effects

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logic/ty.hpp"
#include "logic/value.hpp"

namespace effver::logic {

// A boolean-valued table for a predicate variable. Either an explicit table
// over serialized argument tuples or a semantic function.
struct PredTable {
  std::vector<Ty> arg_tys;
  std::function<bool(const std::vector<Value>&)> fn;
};

// A total table for an uninterpreted function over the configured carrier.
struct FnTable {
  Ty fn_ty = Ty::fn(Ty::integer(), Ty::integer());
  std::function<Value(const Value&)> fn;
};

// Evaluation environment: scoped term-variable bindings plus tables for
// predicate variables and uninterpreted functions.
class Env {
public:
  void bind(const std::string& name, Value v) { vars_.emplace_back(name, std::move(v)); }
  void unbind() { vars_.pop_back(); }

  const Value* lookup(const std::string& name) const {
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  std::map<std::string, PredTable> preds;
  std::map<std::string, FnTable> funs;

  std::vector<std::pair<std::string, Value>> bindings() const { return vars_; }

private:
  std::vector<std::pair<std::string, Value>> vars_;
};

// RAII scope for quantifier loops.
struct Scoped {
  Env& env;
  Scoped(Env& e, const std::string& name, Value v) : env(e) { env.bind(name, std::move(v)); }
  ~Scoped() { env.unbind(); }
};

} // namespace effver::logic

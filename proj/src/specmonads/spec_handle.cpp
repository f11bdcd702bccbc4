#include "specmonads/spec_handle.hpp"

#include <vector>

#include "logic/errors.hpp"
#include "logic/subst.hpp"

namespace effver::specm {

using logic::Term;
using logic::Ty;

namespace {

struct Entry {
  std::string index_var;
  SpecExpr spec;
};

std::vector<Entry>& registry() {
  thread_local std::vector<Entry> r;
  return r;
}

constexpr const char* kPrefix = "#spec:";

} // namespace

Ty spec_marker() { return Ty::enumeration("$spec", {{"$w", {}}}); }

int register_spec_handle(std::string index_var, SpecExpr spec) {
  registry().push_back({std::move(index_var), std::move(spec)});
  return int(registry().size()) - 1;
}

Term make_spec_handle(int id, const Term& idx, const Ty& idx_ty) {
  return Term::apply(kPrefix + std::to_string(id), Ty::fn(idx_ty, spec_marker()), idx);
}

bool is_spec_handle(const Term& t) {
  return t.kind() == Term::Kind::Apply && t.fn_name().rfind(kPrefix, 0) == 0;
}

SpecExpr resolve_spec_handle(const Term& t) {
  if (!is_spec_handle(t)) throw ShapeMismatch("expected a spec-valued leaf");
  int id = std::stoi(t.fn_name().substr(std::string(kPrefix).size()));
  const Entry& e = registry().at(size_t(id));
  SpecExpr out = refresh_spec(e.spec);
  for (auto& b : out.bodies) b = logic::subst_formula(b, e.index_var, t.child(0));
  return out;
}

} // namespace effver::specm

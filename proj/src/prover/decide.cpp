#include "prover/decide.hpp"

#include <sstream>

#include "logic/errors.hpp"
#include "logic/eval.hpp"
#include "logic/fresh.hpp"
#include "logic/pretty.hpp"
#include "logic/subst.hpp"

namespace effver::prover {

using logic::DomainConfig;
using logic::Env;
using logic::Formula;
using logic::PredSig;
using logic::Ty;
using logic::Value;

std::string Cex::show() const {
  std::ostringstream os;
  for (size_t i = 0; i < assignments.size(); ++i) {
    if (i) os << ", ";
    os << assignments[i].first << " = " << assignments[i].second;
  }
  return os.str();
}

namespace {

struct TableSpace {
  std::vector<std::vector<Value>> tuples;
  uint64_t count = 0; // number of tables
};

std::optional<TableSpace> table_space(const std::vector<Ty>& args, size_t domain_cap,
                                      size_t value_count, const DomainConfig& dom) {
  TableSpace ts;
  ts.tuples = {{}};
  size_t domain = 1;
  for (const auto& ty : args) {
    const auto& c = logic::carrier(ty, dom);
    domain *= c.size();
    if (domain > domain_cap) return std::nullopt;
    std::vector<std::vector<Value>> next;
    for (const auto& prefix : ts.tuples)
      for (const auto& v : c) {
        auto t = prefix;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    ts.tuples = std::move(next);
  }
  // value_count^domain tables
  double total = 1;
  for (size_t i = 0; i < ts.tuples.size(); ++i) {
    total *= double(value_count);
    if (total > double(1ull << 22)) return std::nullopt;
  }
  ts.count = 1;
  for (size_t i = 0; i < ts.tuples.size(); ++i) ts.count *= value_count;
  return ts;
}

struct Search {
  const Formula& f;
  const DomainConfig& dom;
  Cex current;
  std::optional<Cex> found;
  bool exceeded = false;
  std::string note;

  bool all_assignments(Env& env, const std::vector<std::pair<std::string, Ty>>& vars,
                       const PredSig& preds, const std::map<std::string, Ty>& fns,
                       size_t vi) {
    if (vi < vars.size()) {
      const auto& [name, ty] = vars[vi];
      for (const auto& v : logic::carrier(ty, dom)) {
        logic::Scoped scope(env, name, v);
        current.assignments.emplace_back(logic::display_base(name), v.show());
        bool cont = all_assignments(env, vars, preds, fns, vi + 1);
        current.assignments.pop_back();
        if (!cont) return false;
      }
      return true;
    }
    return all_tables(env, std::vector<std::pair<std::string, std::vector<Ty>>>(
                               preds.begin(), preds.end()),
                      fns, 0);
  }

  bool all_tables(Env& env, const std::vector<std::pair<std::string, std::vector<Ty>>>& preds,
                  const std::map<std::string, Ty>& fns, size_t pi) {
    if (pi < preds.size()) {
      const auto& [name, args] = preds[pi];
      auto ts = table_space(args, dom.pred_cap, 2, dom);
      if (!ts) {
        exceeded = true;
        note = "predicate table enumeration for " + logic::display_base(name) +
               " exceeds the cap";
        return false;
      }
      for (uint64_t bits = 0; bits < ts->count; ++bits) {
        auto tuples = ts->tuples;
        env.preds[name] = logic::PredTable{
            args, [tuples, bits](const std::vector<Value>& a) {
              for (size_t k = 0; k < tuples.size(); ++k)
                if (tuples[k] == a) return ((bits >> k) & 1) != 0;
              return false;
            }};
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (size_t k = 0; k < ts->tuples.size(); ++k)
          if ((bits >> k) & 1) {
            if (!first) os << ", ";
            first = false;
            os << Value::tuple(ts->tuples[k]).show();
          }
        os << "}";
        current.assignments.emplace_back(logic::display_base(name), os.str());
        bool cont = all_tables(env, preds, fns, pi + 1);
        current.assignments.pop_back();
        env.preds.erase(name);
        if (!cont) return false;
      }
      return true;
    }
    return all_fn_tables(env, std::vector<std::pair<std::string, Ty>>(fns.begin(), fns.end()),
                         0);
  }

  bool all_fn_tables(Env& env, const std::vector<std::pair<std::string, Ty>>& fns, size_t fi) {
    if (fi < fns.size()) {
      const auto& [name, fnty] = fns[fi];
      const auto& codomain = logic::carrier(fnty.cod(), dom);
      auto ts = table_space({fnty.dom()}, dom.fn_cap, codomain.size(), dom);
      if (!ts) {
        exceeded = true;
        note = "function table enumeration for " + logic::display_base(name) +
               " exceeds the cap";
        return false;
      }
      std::vector<size_t> picks(ts->tuples.size(), 0);
      while (true) {
        auto tuples = ts->tuples;
        auto table = picks;
        env.funs[name] = logic::FnTable{
            fnty, [tuples, table, &codomain](const Value& a) {
              for (size_t k = 0; k < tuples.size(); ++k)
                if (tuples[k][0] == a) return codomain[table[k]];
              return codomain[0];
            }};
        std::ostringstream os;
        os << "[";
        for (size_t k = 0; k < tuples.size(); ++k) {
          if (k) os << ", ";
          os << tuples[k][0].show() << " -> " << codomain[picks[k]].show();
        }
        os << "]";
        current.assignments.emplace_back(logic::display_base(name), os.str());
        bool cont = all_fn_tables(env, fns, fi + 1);
        current.assignments.pop_back();
        env.funs.erase(name);
        if (!cont) return false;
        // advance
        size_t k = 0;
        while (k < picks.size()) {
          if (++picks[k] < codomain.size()) break;
          picks[k] = 0;
          ++k;
        }
        if (k == picks.size() || picks.empty()) break;
      }
      return true;
    }
    // evaluate
    Env scratch = env;
    if (!logic::eval(f, scratch, dom)) {
      found = current;
      return false;
    }
    return true;
  }
};

} // namespace

Decision decide(const Formula& f, const DomainConfig& dom,
                const std::map<std::string, Ty>& var_tys, const PredSig& pred_sig,
                const std::map<std::string, Ty>& fn_tys, const Env& base) {
  Search search{f, dom};
  Env env = base;
  std::vector<std::pair<std::string, Ty>> vars(var_tys.begin(), var_tys.end());
  // Skip names already interpreted by the base environment.
  PredSig preds;
  for (const auto& [n, a] : pred_sig)
    if (!base.preds.count(n)) preds.emplace(n, a);
  std::map<std::string, Ty> fns;
  for (const auto& [n, t] : fn_tys)
    if (!base.funs.count(n)) fns.emplace(n, t);
  try {
    search.all_assignments(env, vars, preds, fns, 0);
  } catch (const CarrierTooLarge& e) {
    return Decision{Status::ResourceExceeded, std::nullopt, e.what()};
  }
  if (search.found) return Decision{Status::CounterExample, search.found, ""};
  if (search.exceeded) return Decision{Status::ResourceExceeded, std::nullopt, search.note};
  return Decision{Status::Valid, std::nullopt, ""};
}

} // namespace effver::prover

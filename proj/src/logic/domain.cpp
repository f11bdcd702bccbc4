#include "logic/domain.hpp"

#include <map>
#include <string>

#include "logic/errors.hpp"

namespace effver::logic {

namespace {

size_t checked_mul(size_t a, size_t b, size_t cap) {
  if (b != 0 && a > cap / b) throw CarrierTooLarge("carrier size exceeds cap");
  return a * b;
}

size_t size_rec(const Ty& ty, const DomainConfig& dom) {
  using K = Ty::Kind;
  const size_t cap = dom.carrier_cap;
  switch (ty.kind()) {
    case K::Unit: return 1;
    case K::Bool: return 2;
    case K::Int: {
      if (dom.int_hi < dom.int_lo) return 0;
      return static_cast<size_t>(dom.int_hi - dom.int_lo + 1);
    }
    case K::Pair: return checked_mul(size_rec(ty.fst(), dom), size_rec(ty.snd(), dom), cap);
    case K::Sum: {
      size_t s = size_rec(ty.left(), dom) + size_rec(ty.right(), dom);
      if (s > cap) throw CarrierTooLarge("carrier size exceeds cap");
      return s;
    }
    case K::List: {
      size_t e = size_rec(ty.elem(), dom);
      size_t total = 0, level = 1;
      for (size_t len = 0; len <= dom.list_bound; ++len) {
        total += level;
        if (total > cap) throw CarrierTooLarge("carrier size exceeds cap");
        level = checked_mul(level, e, cap);
      }
      return total;
    }
    case K::Enum: {
      size_t total = 0;
      for (const auto& c : ty.ctors()) {
        size_t s = 1;
        for (const auto& a : c.args) s = checked_mul(s, size_rec(a, dom), cap);
        total += s;
        if (total > cap) throw CarrierTooLarge("carrier size exceeds cap");
      }
      return total;
    }
    case K::Fn:
      throw CarrierTooLarge("function types have no enumerable carrier");
  }
  return 0;
}

void enumerate(const Ty& ty, const DomainConfig& dom, std::vector<Value>& out);

void enum_product(const std::vector<Ty>& parts, const DomainConfig& dom, size_t idx,
                  std::vector<Value>& acc, std::vector<std::vector<Value>>& out) {
  if (idx == parts.size()) {
    out.push_back(acc);
    return;
  }
  std::vector<Value> c;
  enumerate(parts[idx], dom, c);
  for (const auto& v : c) {
    acc.push_back(v);
    enum_product(parts, dom, idx + 1, acc, out);
    acc.pop_back();
  }
}

void enumerate(const Ty& ty, const DomainConfig& dom, std::vector<Value>& out) {
  using K = Ty::Kind;
  switch (ty.kind()) {
    case K::Unit:
      out.push_back(Value::unit());
      return;
    case K::Bool:
      out.push_back(Value::boolean(false));
      out.push_back(Value::boolean(true));
      return;
    case K::Int:
      for (int64_t i = dom.int_lo; i <= dom.int_hi; ++i) out.push_back(Value::integer(i));
      return;
    case K::Pair: {
      std::vector<Value> a, b;
      enumerate(ty.fst(), dom, a);
      enumerate(ty.snd(), dom, b);
      for (const auto& x : a)
        for (const auto& y : b) out.push_back(Value::pair(x, y));
      return;
    }
    case K::Sum: {
      std::vector<Value> a, b;
      enumerate(ty.left(), dom, a);
      enumerate(ty.right(), dom, b);
      for (const auto& x : a) out.push_back(Value::inl(x));
      for (const auto& y : b) out.push_back(Value::inr(y));
      return;
    }
    case K::List: {
      std::vector<Value> elems;
      enumerate(ty.elem(), dom, elems);
      std::vector<std::vector<Value>> level = {{}};
      out.push_back(Value::list({}));
      for (size_t len = 1; len <= dom.list_bound; ++len) {
        std::vector<std::vector<Value>> next;
        for (const auto& prefix : level)
          for (const auto& e : elems) {
            auto l = prefix;
            l.push_back(e);
            out.push_back(Value::list(l));
            next.push_back(std::move(l));
          }
        level = std::move(next);
      }
      return;
    }
    case K::Enum: {
      for (const auto& c : ty.ctors()) {
        if (c.args.empty()) {
          out.push_back(Value::enum_ctor(c.name, {}));
          continue;
        }
        std::vector<std::vector<Value>> combos;
        std::vector<Value> acc;
        enum_product(c.args, dom, 0, acc, combos);
        for (auto& args : combos) out.push_back(Value::enum_ctor(c.name, std::move(args)));
      }
      return;
    }
    case K::Fn:
      throw CarrierTooLarge("function types have no enumerable carrier");
  }
}

// Structural key: enum names alone are not unique across programs.
std::string mangle(const Ty& ty) {
  using K = Ty::Kind;
  switch (ty.kind()) {
    case K::Unit: return "u";
    case K::Bool: return "b";
    case K::Int: return "i";
    case K::Pair: return "P(" + mangle(ty.fst()) + "," + mangle(ty.snd()) + ")";
    case K::Sum: return "S(" + mangle(ty.left()) + "," + mangle(ty.right()) + ")";
    case K::List: return "L(" + mangle(ty.elem()) + ")";
    case K::Enum: {
      std::string s = "E(" + ty.enum_name();
      for (const auto& c : ty.ctors()) {
        s += "|" + c.name;
        for (const auto& a : c.args) s += ":" + mangle(a);
      }
      return s + ")";
    }
    case K::Fn: return "F(" + mangle(ty.dom()) + "," + mangle(ty.cod()) + ")";
  }
  return "?";
}

struct CacheKey {
  std::string ty;
  int64_t lo, hi;
  size_t bound;
  bool operator<(const CacheKey& o) const {
    if (ty != o.ty) return ty < o.ty;
    if (lo != o.lo) return lo < o.lo;
    if (hi != o.hi) return hi < o.hi;
    return bound < o.bound;
  }
};

} // namespace

const std::vector<Value>& carrier(const Ty& ty, const DomainConfig& dom) {
  thread_local std::map<CacheKey, std::vector<Value>> cache;
  // Cap check first; caps vary across configs sharing a cache key.
  if (size_rec(ty, dom) > dom.carrier_cap) throw CarrierTooLarge("carrier size exceeds cap");
  CacheKey key{mangle(ty), dom.int_lo, dom.int_hi, dom.list_bound};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Value> out;
  enumerate(ty, dom, out);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

size_t carrier_size(const Ty& ty, const DomainConfig& dom) { return size_rec(ty, dom); }

} // namespace effver::logic

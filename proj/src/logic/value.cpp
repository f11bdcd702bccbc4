#include "logic/value.hpp"

#include <sstream>

namespace effver::logic {

Value Value::unit() {
  static const Value v(std::make_shared<Node>(Node{Kind::Unit}));
  return v;
}
Value Value::boolean(bool b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bool;
  n->b = b;
  return Value(n);
}
Value Value::integer(int64_t i) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Int;
  n->i = i;
  return Value(n);
}
Value Value::pair(Value a, Value b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->parts = {std::move(a), std::move(b)};
  return Value(n);
}
Value Value::inl(Value v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->b = true;
  n->parts = {std::move(v)};
  return Value(n);
}
Value Value::inr(Value v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->b = false;
  n->parts = {std::move(v)};
  return Value(n);
}
Value Value::list(std::vector<Value> items) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::List;
  n->parts = std::move(items);
  return Value(n);
}
Value Value::enum_ctor(std::string name, std::vector<Value> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Enum;
  n->name = std::move(name);
  n->parts = std::move(args);
  return Value(n);
}
Value Value::tuple(const std::vector<Value>& parts) {
  if (parts.empty()) return unit();
  Value acc = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) acc = pair(parts[i], acc);
  return acc;
}

bool Value::operator==(const Value& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Unit: return true;
    case Kind::Bool: return node_->b == o.node_->b;
    case Kind::Int: return node_->i == o.node_->i;
    case Kind::Sum:
      if (node_->b != o.node_->b) return false;
      return node_->parts[0] == o.node_->parts[0];
    case Kind::Enum:
      if (node_->name != o.node_->name) return false;
      [[fallthrough]];
    case Kind::Pair:
    case Kind::List: {
      if (node_->parts.size() != o.node_->parts.size()) return false;
      for (size_t i = 0; i < node_->parts.size(); ++i)
        if (!(node_->parts[i] == o.node_->parts[i])) return false;
      return true;
    }
  }
  return false;
}

bool Value::operator<(const Value& o) const {
  if (node_->kind != o.node_->kind) return node_->kind < o.node_->kind;
  switch (node_->kind) {
    case Kind::Unit: return false;
    case Kind::Bool: return node_->b < o.node_->b;
    case Kind::Int: return node_->i < o.node_->i;
    case Kind::Sum:
      if (node_->b != o.node_->b) return node_->b > o.node_->b; // inl before inr
      return node_->parts[0] < o.node_->parts[0];
    case Kind::Enum:
      if (node_->name != o.node_->name) return node_->name < o.node_->name;
      [[fallthrough]];
    case Kind::Pair:
    case Kind::List: {
      if (node_->parts.size() != o.node_->parts.size())
        return node_->parts.size() < o.node_->parts.size();
      for (size_t i = 0; i < node_->parts.size(); ++i) {
        if (node_->parts[i] < o.node_->parts[i]) return true;
        if (o.node_->parts[i] < node_->parts[i]) return false;
      }
      return false;
    }
  }
  return false;
}

std::string Value::show() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Unit: os << "()"; break;
    case Kind::Bool: os << (as_bool() ? "true" : "false"); break;
    case Kind::Int: os << as_int(); break;
    case Kind::Pair: os << "(" << fst().show() << ", " << snd().show() << ")"; break;
    case Kind::Sum:
      os << (is_left() ? "inl " : "inr ") << sum_payload().show();
      break;
    case Kind::List: {
      os << "[";
      for (size_t i = 0; i < items().size(); ++i) {
        if (i) os << "; ";
        os << items()[i].show();
      }
      os << "]";
      break;
    }
    case Kind::Enum: {
      os << ctor();
      for (const auto& a : ctor_args()) os << " " << a.show();
      break;
    }
  }
  return os.str();
}

} // namespace effver::logic

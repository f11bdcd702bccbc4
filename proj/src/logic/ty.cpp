#include "logic/ty.hpp"

#include <sstream>

namespace effver::logic {

Ty Ty::unit() {
  auto n = std::make_shared<Node>(Node{Kind::Unit, {}, {}, {}});
  return Ty(std::move(n));
}
Ty Ty::boolean() { return Ty(std::make_shared<Node>(Node{Kind::Bool, {}, {}, {}})); }
Ty Ty::integer() { return Ty(std::make_shared<Node>(Node{Kind::Int, {}, {}, {}})); }
Ty Ty::pair(Ty a, Ty b) {
  return Ty(std::make_shared<Node>(Node{Kind::Pair, {std::move(a), std::move(b)}, {}, {}}));
}
Ty Ty::sum(Ty a, Ty b) {
  return Ty(std::make_shared<Node>(Node{Kind::Sum, {std::move(a), std::move(b)}, {}, {}}));
}
Ty Ty::list(Ty t) {
  return Ty(std::make_shared<Node>(Node{Kind::List, {std::move(t)}, {}, {}}));
}
Ty Ty::enumeration(std::string name, std::vector<EnumCtor> ctors) {
  return Ty(std::make_shared<Node>(Node{Kind::Enum, {}, std::move(name), std::move(ctors)}));
}
Ty Ty::fn(Ty dom, Ty cod) {
  return Ty(std::make_shared<Node>(Node{Kind::Fn, {std::move(dom), std::move(cod)}, {}, {}}));
}

Ty Ty::empty() { return enumeration("empty", {}); }

Ty Ty::event(Ty in, Ty out) {
  return enumeration("event", {{"In", {std::move(in)}}, {"Out", {std::move(out)}}});
}

Ty Ty::tuple(const std::vector<Ty>& parts) {
  if (parts.empty()) return unit();
  Ty acc = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) acc = pair(parts[i], acc);
  return acc;
}

const Ty::EnumCtor* Ty::find_ctor(const std::string& name) const {
  for (const auto& c : node_->ctors)
    if (c.name == name) return &c;
  return nullptr;
}

bool Ty::operator==(const Ty& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Unit:
    case Kind::Bool:
    case Kind::Int:
      return true;
    case Kind::Enum: {
      if (node_->name != o.node_->name) return false;
      if (node_->ctors.size() != o.node_->ctors.size()) return false;
      for (size_t i = 0; i < node_->ctors.size(); ++i) {
        if (node_->ctors[i].name != o.node_->ctors[i].name) return false;
        if (node_->ctors[i].args.size() != o.node_->ctors[i].args.size()) return false;
        for (size_t j = 0; j < node_->ctors[i].args.size(); ++j)
          if (!(node_->ctors[i].args[j] == o.node_->ctors[i].args[j])) return false;
      }
      return true;
    }
    default: {
      if (node_->sub.size() != o.node_->sub.size()) return false;
      for (size_t i = 0; i < node_->sub.size(); ++i)
        if (!(node_->sub[i] == o.node_->sub[i])) return false;
      return true;
    }
  }
}

std::string Ty::show() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Unit: os << "unit"; break;
    case Kind::Bool: os << "bool"; break;
    case Kind::Int: os << "int"; break;
    case Kind::Pair: os << "(" << fst().show() << " * " << snd().show() << ")"; break;
    case Kind::Sum: os << "(" << left().show() << " + " << right().show() << ")"; break;
    case Kind::List: os << "list " << elem().show(); break;
    case Kind::Enum: os << enum_name(); break;
    case Kind::Fn: os << "(" << dom().show() << " -> " << cod().show() << ")"; break;
  }
  return os.str();
}

} // namespace effver::logic

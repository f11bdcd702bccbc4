#pragma once

#include <memory>
#include <string>
#include <vector>

namespace effver::logic {

// Simple types for the term language. Values of these types have finite
// carriers once an integer interval and a list length bound are fixed.
class Ty {
public:
  enum class Kind { Unit, Bool, Int, Pair, Sum, List, Enum, Fn };

  struct EnumCtor {
    std::string name;
    std::vector<Ty> args;
  };

  Kind kind() const { return node_->kind; }

  const Ty& fst() const { return node_->sub[0]; }   // Pair
  const Ty& snd() const { return node_->sub[1]; }   // Pair
  const Ty& left() const { return node_->sub[0]; }  // Sum
  const Ty& right() const { return node_->sub[1]; } // Sum
  const Ty& elem() const { return node_->sub[0]; }  // List
  const Ty& dom() const { return node_->sub[0]; }   // Fn
  const Ty& cod() const { return node_->sub[1]; }   // Fn

  const std::string& enum_name() const { return node_->name; }
  const std::vector<EnumCtor>& ctors() const { return node_->ctors; }
  const EnumCtor* find_ctor(const std::string& name) const;

  bool is_empty_enum() const { return kind() == Kind::Enum && node_->ctors.empty(); }

  static Ty unit();
  static Ty boolean();
  static Ty integer();
  static Ty pair(Ty a, Ty b);
  static Ty sum(Ty a, Ty b);
  static Ty list(Ty t);
  static Ty enumeration(std::string name, std::vector<EnumCtor> ctors);
  static Ty fn(Ty dom, Ty cod);

  // The empty type, used as the output of operations whose continuation is
  // unreachable (throw, fail).
  static Ty empty();
  // Events In(i) / Out(o) recorded by interactive runs.
  static Ty event(Ty in = Ty::integer(), Ty out = Ty::integer());
  // Builds a tuple as right-nested pairs; tuple({}) is unit.
  static Ty tuple(const std::vector<Ty>& parts);

  bool operator==(const Ty& o) const;
  bool operator!=(const Ty& o) const { return !(*this == o); }

  std::string show() const;

private:
  struct Node {
    Kind kind;
    std::vector<Ty> sub;
    std::string name;             // Enum
    std::vector<EnumCtor> ctors;  // Enum
  };
  explicit Ty(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

} // namespace effver::logic

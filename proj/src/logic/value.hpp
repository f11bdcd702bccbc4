#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "logic/ty.hpp"

namespace effver::logic {

// Concrete values: results of evaluating closed terms, elements of finite
// carriers, and counterexample assignments.
class Value {
public:
  enum class Kind { Unit, Bool, Int, Pair, Sum, List, Enum };

  Kind kind() const { return node_->kind; }

  bool as_bool() const { return node_->b; }
  int64_t as_int() const { return node_->i; }
  const Value& fst() const { return node_->parts[0]; }
  const Value& snd() const { return node_->parts[1]; }
  bool is_left() const { return node_->b; } // Sum tag
  const Value& sum_payload() const { return node_->parts[0]; }
  const std::vector<Value>& items() const { return node_->parts; }      // List
  const std::string& ctor() const { return node_->name; }               // Enum
  const std::vector<Value>& ctor_args() const { return node_->parts; }  // Enum

  static Value unit();
  static Value boolean(bool b);
  static Value integer(int64_t i);
  static Value pair(Value a, Value b);
  static Value inl(Value v);
  static Value inr(Value v);
  static Value list(std::vector<Value> items);
  static Value enum_ctor(std::string name, std::vector<Value> args);
  static Value tuple(const std::vector<Value>& parts);

  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const; // total order, used for sets

  std::string show() const;

private:
  struct Node {
    Kind kind;
    bool b = false;
    int64_t i = 0;
    std::string name;
    std::vector<Value> parts;
  };
  explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

} // namespace effver::logic

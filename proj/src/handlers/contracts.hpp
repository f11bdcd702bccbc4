#pragma once

#include <map>
#include <string>

#include "logic/formula.hpp"

namespace effver::handlers {

// Upfront specification for one operation of a free signature: a
// precondition over the input and a postcondition over input and output.
struct OpContract {
  std::string input_var;
  std::string output_var;
  logic::Formula pre = logic::Formula::top();
  logic::Formula post = logic::Formula::top();
};

using ContractSet = std::map<std::string, OpContract>;

} // namespace effver::handlers

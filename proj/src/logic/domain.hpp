#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "logic/ty.hpp"
#include "logic/value.hpp"

namespace effver::logic {

// Finite-domain discharge regime: quantified integers range over [lo,hi],
// list carriers are bounded by length, and second-order enumeration
// (predicate / uninterpreted-function tables) is capped by domain size.
struct DomainConfig {
  int64_t int_lo = 0;
  int64_t int_hi = 7;
  size_t list_bound = 4;
  size_t pred_cap = 6;      // max |domain| for 2^n predicate tables
  size_t fn_cap = 6;        // max |domain| for function table enumeration
  size_t carrier_cap = 2'000'000;
};

// Enumerates the carrier of a type, in a fixed deterministic order. Throws
// CarrierTooLarge past dom.carrier_cap; function types have no carrier.
// The result is cached per (type, interval, bound) and must not be mutated.
const std::vector<Value>& carrier(const Ty& ty, const DomainConfig& dom);

// Carrier size without materializing it (still throws on function types).
size_t carrier_size(const Ty& ty, const DomainConfig& dom);

} // namespace effver::logic

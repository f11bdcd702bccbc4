#pragma once

#include <optional>

#include "observations/observation.hpp"

namespace effver::obs {

// Carrier types an observation is instantiated at.
struct RegistryConfig {
  logic::Ty state = logic::Ty::integer();
  logic::Ty exn = logic::Ty::enumeration("exn", {{"Exn", {}}});
  logic::Ty input = logic::Ty::integer();
  logic::Ty output = logic::Ty::integer();
};

// The observation registry keyed by the CLI effect names: st, exc,
// exc-total, exc-partial, nd-demonic, nd-angelic, io-free, io-hist,
// io-histst, iost (and pure).
std::vector<std::string> registry_keys();
Observation lookup_observation(const std::string& key, const RegistryConfig& cfg);

} // namespace effver::obs

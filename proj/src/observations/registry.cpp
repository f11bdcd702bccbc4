#include "observations/registry.hpp"

#include "logic/errors.hpp"
#include "observations/rules.hpp"

namespace effver::obs {

std::vector<std::string> registry_keys() {
  return {"st",         "exc",       "exc-total", "exc-partial", "nd-demonic",
          "nd-angelic", "io-free",   "io-hist",   "io-histst",   "iost",
          "pure"};
}

Observation lookup_observation(const std::string& key, const RegistryConfig& cfg) {
  if (key == "st") return theta_st(cfg.state);
  if (key == "exc") return theta_exc(cfg.exn);
  if (key == "exc-total") return theta_bot(cfg.exn);
  if (key == "exc-partial") return theta_top(cfg.exn);
  if (key == "nd-demonic") return theta_demonic();
  if (key == "nd-angelic") return theta_angelic();
  if (key == "io-free") return theta_fr(cfg.input, cfg.output);
  if (key == "io-hist") return theta_hist(cfg.input, cfg.output);
  if (key == "io-histst") return theta_histst(cfg.input, cfg.output);
  if (key == "iost") return theta_iost(cfg.state, cfg.input, cfg.output);
  if (key == "pure") return theta_pure();
  throw UnknownObservation("unknown observation key: " + key);
}

} // namespace effver::obs

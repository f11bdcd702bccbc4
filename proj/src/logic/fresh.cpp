#include "logic/fresh.hpp"

namespace effver::logic {

static std::atomic<uint64_t> counter{0};

std::string fresh_name(const std::string& base) {
  std::string stem = display_base(base);
  return stem + "#" + std::to_string(++counter);
}

std::string display_base(const std::string& name) {
  auto pos = name.find('#');
  if (pos == std::string::npos) return name;
  return name.substr(0, pos);
}

} // namespace effver::logic

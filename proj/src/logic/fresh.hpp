#pragma once

#include <atomic>
#include <string>

namespace effver::logic {

// Globally fresh binder names. The "#" separator never appears in surface
// identifiers, so generated names cannot collide with user ones.
std::string fresh_name(const std::string& base);

// Strips the "#n" suffix, recovering the display base.
std::string display_base(const std::string& name);

} // namespace effver::logic

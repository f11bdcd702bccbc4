#pragma once

#include <map>
#include <set>
#include <string>

#include "logic/formula.hpp"

namespace effver::logic {

// Prints terms and formulas in the surface syntax. Generated binder names
// ("x#42") display as their base, disambiguated with primes, so printed
// normal forms are stable across runs and usable in golden tests.
class Printer {
public:
  // Reserves display names for the free variables of f before printing.
  void reserve_free(const Formula& f);
  void reserve_free(const Term& t);
  // Forces a binder (e.g. a spec's post variable) to a display name.
  std::string intro(const std::string& name);
  void retire(const std::string& name);

  std::string term(const Term& t, int prec = 0);
  std::string formula(const Formula& f, int prec = 0);

private:
  std::string display_of(const std::string& name);
  std::map<std::string, std::string> display_;
  std::map<std::string, int> active_; // display name -> refcount
};

std::string show_term(const Term& t);
std::string show_formula(const Formula& f);

} // namespace effver::logic

// util.hpp -- shared helpers for the test suite
#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmkit/io.hpp"
#include "mmkit/market.hpp"

namespace testutil {

// Parse an instance from inline text; the instance must validate cleanly.
inline mmkit::MarketInstance mk(const std::string& text) {
  mmkit::ValidationReport rep;
  mmkit::MarketInstance inst = mmkit::parse_instance(text, &rep);
  if (!rep.ok()) throw std::runtime_error("test instance invalid:\n" + rep.to_string());
  return inst;
}

// Build a matching from per-student school names, "-" meaning unmatched.
// The pair must be a contract; anything else is a test bug, so let it throw.
inline mmkit::Matching assign(const mmkit::MarketInstance& inst,
                              std::initializer_list<const char*> names) {
  if (static_cast<int>(names.size()) != inst.n())
    throw std::runtime_error("assign: wrong arity");
  mmkit::Matching y;
  y.to_school.assign(inst.n(), mmkit::kNone);
  int i = 0;
  for (const char* name : names) {
    if (std::string(name) != "-") y.to_school[i] = inst.school_index(name);
    ++i;
  }
  mmkit::check_matching(inst, y);
  return y;
}

}  // namespace testutil

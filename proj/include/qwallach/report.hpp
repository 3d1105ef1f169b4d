#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qwallach {

/// Outcome of one verification. `params` carries the (n, q, t, ...) values
/// the check ran at; `details` names a witness on failure.
struct Check {
  std::string name;
  std::map<std::string, std::int64_t> params;
  bool pass = false;
  std::string details;
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace qwallach

#pragma once

#include <string>
#include <vector>

namespace hhwb {

/// One row of a validation table.
struct ConditionCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;
  std::string detail;
};

struct ValidationReport {
  std::vector<ConditionCheck> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  const ConditionCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

}  // namespace hhwb

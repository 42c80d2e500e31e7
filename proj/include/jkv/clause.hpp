#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace jkv {

/// One checked identity of a certificate.
struct Clause {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<Clause>& clauses) {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed; });
}

inline const Clause* first_failure(const std::vector<Clause>& clauses) {
  for (const auto& c : clauses)
    if (!c.passed) return &c;
  return nullptr;
}

}  // namespace jkv

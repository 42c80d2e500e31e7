#pragma once

// Limit along lambda by reading off the t-expansion: lambda(t) scales the
// component at chi by t^e with e = sum lambda_i chi_i. Terms are grouped by e;
// any nonzero term with e < 0 blows up, otherwise t -> 0 keeps only e = 0.

#include "jkv/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace jkv::oracle {

using Components = std::map<std::vector<Integer>, std::vector<Rational>>;

inline std::optional<Components> oracle_limit(const std::vector<Integer>& lambda, const Components& v) {
  std::map<Integer, Components> by_exponent;
  for (const auto& [chi, coords] : v) {
    if (chi.size() != lambda.size()) throw Error("oracle_limit: rank mismatch");
    bool nonzero = false;
    for (const auto& c : coords) nonzero = nonzero || c != 0;
    if (!nonzero) continue;
    Integer e = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) e += lambda[i] * chi[i];
    by_exponent[e].emplace(chi, coords);
  }
  if (!by_exponent.empty() && by_exponent.begin()->first < 0) return std::nullopt;
  auto constant = by_exponent.find(Integer(0));
  return constant == by_exponent.end() ? Components{} : constant->second;
}

}  // namespace jkv::oracle

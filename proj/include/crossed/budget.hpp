#pragma once

// Rough operation counts for the axiom checks, used to refuse very large
// jobs unless forced.  The numbers only need to grow like the real cost.

#include <cstdlib>
#include <string>
#include <vector>

#include "crossed/group.hpp"

namespace crossed {

/// Default budget, overridden by CROSSED_OP_BUDGET.
inline double operation_budget() {
  if (const char* env = std::getenv("CROSSED_OP_BUDGET")) {
    double v = std::strtod(env, nullptr);
    if (v > 0) return v;
  }
  return 2e9;
}

/// Validation of a T-coalgebra with the given component dimensions:
/// associativity, multiplicativity of Delta and coassociativity.
inline double estimate_validate_ops(const FiniteGroup& G, const std::vector<std::size_t>& dims) {
  std::size_t n = G.order();
  double ops = 0;
  for (std::size_t a = 0; a < n; ++a) {
    double d = static_cast<double>(dims[a]);
    ops += d * d * d * d;
    for (std::size_t b = 0; b < n; ++b) {
      double dab = static_cast<double>(dims[G.mul(a, b)]);
      ops += dab * dab * d * static_cast<double>(dims[b]);
      for (std::size_t c = 0; c < n; ++c)
        ops += static_cast<double>(dims[G.mul(G.mul(a, b), c)]) * d * static_cast<double>(dims[b]) * static_cast<double>(dims[c]);
    }
  }
  return ops;
}

/// Component dimensions of D(H): d_{a^-1} times the total dimension.
inline std::vector<std::size_t> double_dims(const FiniteGroup& G, const std::vector<std::size_t>& dims) {
  std::size_t N = 0;
  for (auto d : dims) N += d;
  std::vector<std::size_t> r;
  for (std::size_t a = 0; a < G.order(); ++a) r.push_back(dims[G.inv(a)] * N);
  return r;
}

struct BudgetCheck {
  double estimate = 0;
  double budget = 0;
  bool exceeded() const { return estimate > budget; }
  std::string message(const std::string& what) const {
    return what + ": estimated " + std::to_string(static_cast<long long>(estimate)) + " operations exceeds the budget of " +
           std::to_string(static_cast<long long>(budget)) + " (pass --force or raise CROSSED_OP_BUDGET)";
  }
};

inline BudgetCheck check_budget(double estimate) { return {estimate, operation_budget()}; }

}  // namespace crossed

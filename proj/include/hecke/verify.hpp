#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hecke/algebra.hpp"

namespace hecke {

struct CheckResult {
  std::string name;
  bool pass = true;
  long long checked = 0;        // how many instances were exercised
  std::string detail;           // free-form summary (windows, outcomes)
  std::string counterexample;   // reproducible payload when failing
};

struct VerificationReport {
  std::string fixture;
  int window = 0;
  uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by name

  bool all_pass() const;
  std::string table() const;
  nlohmann::ordered_json to_json() const;
};

/// Basis-product hook so a harness can inject a corrupted engine.
using BasisProduct =
    std::function<HeckeElt(const Algebra&, const ExtElt&, const ExtElt&)>;

/// v = 1 specialization oracle: every basis product in the window must
/// specialize to the single group-ring term of the direct group product.
/// The expected value never touches the relation engine.
CheckResult group_algebra_oracle(const Algebra& a, int window,
                                 const BasisProduct& product = {});

/// Every relation and structural property, over one algebra, one window.
/// Deterministic given (algebra, window, seed).
VerificationReport run_paper_suite(const Algebra& a, const std::string& fixture,
                                   int window, uint64_t seed);

/// Seeded random group elements with length <= maxlen (rejection sampling).
std::vector<ExtElt> random_elements(const GroupContext& g, size_t count,
                                    int maxlen, uint64_t seed);

}  // namespace hecke

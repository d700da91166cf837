#pragma once

// Hand-built group contexts mirroring the shipped fixture configurations,
// for tests that predate (or avoid) the JSON loader.

#include <memory>
#include <vector>

#include "hecke/ext_weyl.hpp"
#include "hecke/root_system.hpp"

namespace testctx {

using namespace hecke;

inline std::vector<IntVec> pm(std::vector<IntVec> v) {
  std::vector<IntVec> out;
  for (auto& x : v) {
    out.push_back(x);
    out.push_back(negate(x));
  }
  return out;
}

// A1, Lambda = Z a^vee (root lattice)
inline std::unique_ptr<GroupContext> a1_root() {
  auto rs = build_root_system(1, {{2}, {-2}}, {{2}}, {{1}});
  return std::make_unique<GroupContext>(rs, std::vector<Int>{},
                                        std::vector<LamElt>{{{1}, {}}});
}

// A1, Lambda = Z omega (weight lattice)
inline std::unique_ptr<GroupContext> a1_weight() {
  auto rs = build_root_system(1, {{1}, {-1}}, {{1}}, {{2}});
  return std::make_unique<GroupContext>(rs, std::vector<Int>{},
                                        std::vector<LamElt>{{{2}, {}}});
}

// A1, Lambda = Z omega + Z/2
inline std::unique_ptr<GroupContext> a1_torsion() {
  auto rs = build_root_system(1, {{1}, {-1}}, {{1}}, {{2}});
  return std::make_unique<GroupContext>(rs, std::vector<Int>{2},
                                        std::vector<LamElt>{{{2}, {0}}});
}

// A2, Lambda = coweight lattice (alcove rotation group Z/3)
inline std::unique_ptr<GroupContext> a2_omega3() {
  auto rs = build_root_system(2, pm({{1, 0}, {0, 1}, {1, 1}}),
                              {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}});
  return std::make_unique<GroupContext>(
      rs, std::vector<Int>{},
      std::vector<LamElt>{{{2, -1}, {}}, {{-1, 2}, {}}});
}

// C2, Lambda = Z^2, parameters split on the long-root wall family
inline std::unique_ptr<GroupContext> c2() {
  auto rs = build_root_system(2, pm({{1, -1}, {1, 1}, {2, 0}, {0, 2}}),
                              {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}});
  return std::make_unique<GroupContext>(
      rs, std::vector<Int>{},
      std::vector<LamElt>{{{1, -1}, {}}, {{0, 1}, {}}});
}

// B3 in doubled coordinates, Lambda = Z^3 (half-integral translations)
inline std::unique_ptr<GroupContext> su6() {
  auto rs = build_root_system(
      3, pm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, -1, 0},
             {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}}),
      {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}},
      {{1, -1, 0}, {0, 1, -1}, {0, 0, 2}});
  return std::make_unique<GroupContext>(
      rs, std::vector<Int>{},
      std::vector<LamElt>{{{1, -1, 0}, {}}, {{0, 1, -1}, {}}, {{0, 0, 2}, {}}});
}

// C3, Lambda = Z^3 + Z/2 (integral translations only)
inline std::unique_ptr<GroupContext> so() {
  auto rs = build_root_system(
      3, pm({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, -1, 0},
             {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}}),
      {{1, -1, 0}, {0, 1, -1}, {0, 0, 2}},
      {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
  return std::make_unique<GroupContext>(
      rs, std::vector<Int>{2},
      std::vector<LamElt>{
          {{1, -1, 0}, {0}}, {{0, 1, -1}, {0}}, {{0, 0, 1}, {0}}});
}

}  // namespace testctx

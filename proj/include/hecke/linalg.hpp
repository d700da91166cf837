#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace hecke {

using Int = long long;
using IntVec = std::vector<Int>;
using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec scale(Int c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline IntVec negate(const IntVec& a) { return scale(-1, a); }

inline bool is_zero(const IntVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

/// Rank of an integer matrix (rows), by fraction-free elimination.
size_t int_rank(std::vector<IntVec> rows);

/// Solve the (possibly underdetermined) system rows[i] . x = rhs[i] over Q.
/// Free variables are set to zero.  Returns nullopt when inconsistent.
std::optional<RatVec> solve_rational(const std::vector<IntVec>& rows,
                                     const std::vector<Rat>& rhs,
                                     size_t ncols);

}  // namespace hecke

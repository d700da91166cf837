#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke/linalg.hpp"

namespace hecke {

/// Construction-time validation failure; carries every violation found.
struct BuildError {
  std::vector<std::string> problems;
  std::string what() const;
};

/// A finite reduced root system, stored as integer functionals on the free
/// part of the ambient translation group.  Coroot free parts are derived
/// from the configured simple coroots by reflection closure.
struct RootSystem {
  size_t ambient_rank = 0;
  std::vector<IntVec> roots;         // all roots, as functionals
  std::vector<IntVec> coroot_free;   // free part of the coroot of roots[i]
  std::vector<int> simple;           // indices into roots, in configured order
  std::vector<int> component;        // component id of roots[i]
  std::vector<int> highest;          // root index of the highest root, per component
  std::vector<bool> positive;        // positivity w.r.t. the simple system
  std::vector<int> negation;         // index of -roots[i]

  size_t size() const { return roots.size(); }
  size_t num_simple() const { return simple.size(); }
  size_t num_components() const { return highest.size(); }

  int index_of(const IntVec& root) const;  // -1 when absent
  Int pairing(int root_idx, const IntVec& lambda_free) const {
    return dot(roots[root_idx], lambda_free);
  }

  /// Cartan integer <roots[i], coroot(roots[j])>.
  Int cartan(int i, int j) const { return dot(roots[i], coroot_free[j]); }

  /// Height of roots[i] in the simple-root basis (sum of coefficients).
  Int height(int i) const;

  /// Sum over positive roots of the coroot free parts (the vector 2rho-check
  /// against which dominance defects are repaired).
  IntVec two_rho_coroot() const;

  /// Dynkin type per component, e.g. "B3"; "?" when not a named type.
  std::vector<std::string> component_types() const;
  std::string type_string() const;  // product joined by "x"
};

/// Build and fully validate a root system from an explicit description.
/// `simple_coroot_free` gives the coroot free part per configured simple root.
RootSystem build_root_system(size_t ambient_rank,
                             const std::vector<IntVec>& roots,
                             const std::vector<IntVec>& simple_roots,
                             const std::vector<IntVec>& simple_coroot_free);

/// Standard realization of a named irreducible type on its own coordinates:
/// A_k on Z^{k+1}, B/C/D_k on Z^k, G2 and F4 in fundamental-coweight
/// coordinates.  Returns (roots, simple_roots, simple_coroots).
struct NamedTypeData {
  size_t rank;
  std::vector<IntVec> roots;
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> simple_coroots;
};
NamedTypeData named_type_data(const std::string& type);

/// Convenience builder for a single named type.
RootSystem build_root_system(const std::string& named_type);

/// The finite Weyl group of a root system, fully enumerated.  Elements are
/// canonically the permutations they induce on the roots; index 0 is the
/// identity.  Reduced words are recovered on demand by the descent algorithm.
class WeylTable {
public:
  explicit WeylTable(const RootSystem& rs);

  size_t size() const { return perm_.size(); }
  const RootSystem& roots() const { return *rs_; }

  int identity() const { return 0; }
  int simple_reflection(size_t simple_pos) const { return simple_refl_[simple_pos]; }
  /// Reflection in an arbitrary root (by root index).
  int reflection(int root_idx) const { return refl_[root_idx]; }

  int mult(int a, int b) const { return mult_[a * nelts_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  int apply(int w, int root_idx) const { return perm_[w][root_idx]; }

  int length(int w) const { return length_[w]; }
  /// Canonical reduced word over simple positions (descent algorithm:
  /// smallest simple sent negative by w^{-1}, peeled on the left).
  std::vector<int> word(int w) const;

  /// Action on a free-part vector, w(x), as an n x n integer matrix
  /// application (row-major matrix stored per element).
  IntVec act_free(int w, const IntVec& x) const;
  RatVec act_free(int w, const RatVec& x) const;
  const IntVec& matrix(int w) const { return act_mat_[w]; }

  int longest_element() const;

private:
  const RootSystem* rs_;
  size_t nelts_ = 0;
  std::vector<std::vector<uint16_t>> perm_;
  std::vector<int> length_;
  std::vector<int> inv_;
  std::vector<int> mult_;                // full multiplication table
  std::vector<IntVec> act_mat_;          // n*n row-major
  std::vector<int> simple_refl_;
  std::vector<int> refl_;                // per root index
  std::unordered_map<std::string, int> index_;

  int index_of_perm(const std::vector<uint16_t>& p) const;
  static std::string perm_key(const std::vector<uint16_t>& p);
};

}  // namespace hecke

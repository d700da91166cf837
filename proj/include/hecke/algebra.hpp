#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecke/ext_weyl.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

/// Finite sparse linear combination of basis symbols T_w with Laurent
/// coefficients.  Zero terms are never stored.
struct HeckeElt {
  std::map<ExtElt, LaurentInt> terms;

  bool is_zero() const { return terms.empty(); }
  LaurentInt coeff(const ExtElt& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? LaurentInt() : it->second;
  }
  void add_term(const ExtElt& w, const LaurentInt& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  HeckeElt& operator+=(const HeckeElt& o) {
    for (auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    for (auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }
  HeckeElt operator+(const HeckeElt& o) const {
    HeckeElt r = *this;
    r += o;
    return r;
  }
  HeckeElt operator-(const HeckeElt& o) const {
    HeckeElt r = *this;
    r -= o;
    return r;
  }
  HeckeElt scaled(const LaurentInt& c) const {
    HeckeElt r;
    for (auto& [w, x] : terms) r.add_term(w, c * x);
    return r;
  }
  bool operator==(const HeckeElt& o) const { return terms == o.terms; }
  bool operator!=(const HeckeElt& o) const { return terms != o.terms; }
};

/// Coefficients over the basis Theta_lambda * T_w (w in the finite Weyl
/// group, index into WeylTable).
using BernsteinKey = std::pair<LamElt, int>;
using BernsteinForm = std::map<BernsteinKey, LaurentInt>;

struct CenterDecomposition {
  bool central = false;
  std::string witness_generator;   // set when not central
  HeckeElt witness_commutator;
  /// Orbit-sum coefficients, keyed by the lexicographically least orbit
  /// element.
  std::map<LamElt, LaurentInt> coeffs;
};

/// The Iwahori-Hecke algebra of one group context with one parameter system.
/// Basis products follow the Iwahori-Matsumoto relations: a gallery
/// factorization reduces everything to generator steps
///   T_s * T_x = T_{sx}                          if len goes up,
///   T_s * T_x = (v^{2L(s)}-1) T_x + v^{2L(s)} T_{sx}   otherwise,
/// together with the free twist by alcove stabilizers.
class Algebra {
public:
  Algebra(std::shared_ptr<const GroupContext> group, ParamSys params);

  const GroupContext& group() const { return *group_; }
  const ParamSys& params() const { return params_; }

  HeckeElt zero() const { return {}; }
  HeckeElt one() const { return basis(group_->one()); }
  HeckeElt basis(const ExtElt& w) const;

  /// L(w): parameter weight along any reduced word of the affine part.
  Int weight(const ExtElt& w) const { return group_->weight_of(w, params_); }

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  /// Inverse of a basis element T_w.
  HeckeElt basis_inverse(const ExtElt& w) const;

  /// Bernstein element; independent of the chosen dominant decomposition.
  HeckeElt theta(const LamElt& lambda) const;
  /// Same, from an explicit decomposition lambda = l1 - l2 (both dominant).
  HeckeElt theta_via(const LamElt& l1, const LamElt& l2) const;

  /// theta(l) * theta(m) == theta(l + m)?
  bool theta_additive(const LamElt& l, const LamElt& m) const;

  /// Right-hand side of the commutation relation for a finite simple
  /// reflection (position into the simple list) against Theta_lambda.
  HeckeElt commutation_rhs(int simple_pos, const LamElt& lambda) const;
  /// T_s * Theta_l - Theta_{s(l)} * T_s  ==  commutation_rhs(s, l)?
  bool commutation_check(int simple_pos, const LamElt& lambda) const;

  BernsteinForm to_bernstein(const HeckeElt& h) const;
  HeckeElt from_bernstein(const BernsteinForm& coeffs) const;

  /// Orbit sum z_O = sum of Theta over a finite Weyl orbit.
  HeckeElt central_element(const std::vector<LamElt>& orbit) const;
  CenterDecomposition center_decompose(const HeckeElt& h) const;

  /// Generators whose commutators certify centrality: all T_s plus the
  /// alcove-stabilizer projections of the lattice generators.
  std::vector<std::pair<std::string, ExtElt>> centrality_generators() const;

  /// The algebra over the torsion-free quotient lattice, with the same
  /// parameters.
  std::shared_ptr<Algebra> torsion_free_quotient() const;
  /// Image of an element or group element under the quotient map.
  ExtElt quotient_elt(const ExtElt& w, const Algebra& target) const;
  HeckeElt quotient_map(const HeckeElt& h, const Algebra& target) const;

  /// Specialize v = 1; the resulting integer combination lives in the group
  /// ring of the extended Weyl group.
  std::map<ExtElt, Int> at_v1(const HeckeElt& h) const;

private:
  std::shared_ptr<const GroupContext> group_;
  ParamSys params_;

  mutable std::mutex mu_;
  mutable std::map<LamElt, HeckeElt> theta_cache_;
  mutable std::map<ExtElt, HeckeElt> inverse_cache_;
  mutable std::map<ExtElt, BernsteinForm> expand_cache_;

  void check_element(const HeckeElt& h) const;

  HeckeElt gen_mul_left(int gen, const HeckeElt& h) const;
  HeckeElt gen_mul_right(const HeckeElt& h, int gen) const;

  /// Commutation right-hand side in Bernstein coordinates (finite part = id).
  BernsteinForm commutation_rhs_bern(int simple_pos, const LamElt& lambda) const;
  BernsteinForm bern_right_mul_simple(const BernsteinForm& b, int simple_pos) const;
  BernsteinForm bern_left_mul_simple(int simple_pos, const BernsteinForm& b) const;
  BernsteinForm expand_basis(const ExtElt& x) const;
};

}  // namespace hecke

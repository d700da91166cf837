#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke/lattice.hpp"
#include "hecke/root_system.hpp"

namespace hecke {

/// Error with a stable machine-readable code.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

/// Element of the extended affine Weyl group, as (translation, finite part).
/// Multiplication: (l1,u1)(l2,u2) = (l1 + u1(l2), u1 u2).
struct ExtElt {
  LamElt lam;
  int w = 0;

  bool operator==(const ExtElt& o) const { return w == o.w && lam == o.lam; }
  bool operator!=(const ExtElt& o) const { return !(*this == o); }
  bool operator<(const ExtElt& o) const {
    if (lam != o.lam) return lam < o.lam;
    return w < o.w;
  }
};

struct ExtEltHash {
  size_t operator()(const ExtElt& e) const {
    size_t h = std::hash<int>()(e.w);
    auto mix = [&h](Int x) {
      h ^= std::hash<Int>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (Int x : e.lam.free) mix(x);
    for (Int x : e.lam.tors) mix(x);
    return h;
  }
};

/// One Coxeter generator of the affine Weyl group, with its base-alcove wall.
struct AffineGen {
  std::string name;   // "s1".."sn" for the finite simples, "s0", "s0'", ...
  ExtElt elt;
  int root_idx;       // root of the fixed wall
  Int level;          // wall level: 0 for finite generators, 1 for affine
  bool finite;
  int simple_pos;     // position into RootSystem::simple for finite generators
};

/// A wall {x : <root, x> = level}; (b,k) and (-b,-k) are identified and the
/// stored representative has a positive root.
struct AffineWall {
  int root_idx;
  Int level;
  bool operator==(const AffineWall& o) const {
    return root_idx == o.root_idx && level == o.level;
  }
};

/// Exponential parameters L(s) per affine generator; param(s) = v^{2 L(s)}.
struct ParamSys {
  std::vector<Int> weight;  // indexed like GroupContext::delta_aff()
};

struct ParamViolation {
  std::string gen_a, gen_b;
  std::string reason;
};

/// Reduced word in the affine generators together with the length-zero
/// remainder stabilizing the base alcove: w = (product of word) * omega.
struct Gallery {
  std::vector<int> word;  // indices into delta_aff()
  ExtElt omega;
};

struct ConjugationChain {
  std::vector<int> plateau;  // generator indices, applied innermost first
  int final_gen;
};

/// Immutable context for one extended affine Weyl group W~ = Lambda x| W.
/// All operations are pure; the memoization caches are guarded internally.
class GroupContext {
public:
  GroupContext(const RootSystem& rs, std::vector<Int> torsion_orders,
               const std::vector<LamElt>& simple_coroots);
  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const RootSystem& roots() const { return *rs_; }
  const WeylTable& weyl() const { return *wt_; }
  const TranslationGroup& lattice() const { return *tg_; }

  ExtElt one() const { return {tg_->zero(), 0}; }
  ExtElt translation(const LamElt& l) const { return {tg_->reduce(l), 0}; }
  ExtElt finite(int w) const { return {tg_->zero(), w}; }

  ExtElt mul(const ExtElt& a, const ExtElt& b) const;
  ExtElt inv(const ExtElt& a) const;
  ExtElt conj(const ExtElt& g, const ExtElt& x) const {  // g x g^{-1}
    return mul(g, mul(x, inv(g)));
  }

  /// Closed-form length; torsion translations have length zero.
  int length(const ExtElt& e) const;

  /// Factor w across the alcove walls; |word| == length(w), and omega
  /// stabilizes the base alcove (the Omega_G-projection of w).
  Gallery gallery(const ExtElt& e) const;
  ExtElt omega_projection(const ExtElt& e) const { return gallery(e).omega; }
  ExtElt waff_part(const ExtElt& e) const { return mul(e, inv(gallery(e).omega)); }

  /// Extended Bruhat-Chevalley order: equal Omega_G-projections and the
  /// affine parts compare by the subword property.
  bool bruhat_leq(const ExtElt& a, const ExtElt& b) const;

  bool is_dominant(const LamElt& l) const;
  /// lambda = first - second with both parts dominant; second = k * 2rho^vee
  /// for the least viable k.
  std::pair<LamElt, LamElt> dominant_decompose(const LamElt& l) const;
  /// Same contract, but keeps the parts short (repairs chamber defects with
  /// dominant orbit representatives instead of multiples of 2rho^vee).
  std::pair<LamElt, LamElt> small_decompose(const LamElt& l) const;
  std::vector<LamElt> weyl_orbit(const LamElt& l) const;  // sorted closure

  const std::vector<AffineGen>& delta_aff() const { return delta_; }
  int delta_size() const { return static_cast<int>(delta_.size()); }
  /// Order of delta[i]*delta[j] in the group; -1 when infinite.
  int coxeter_m(int i, int j) const;

  AffineWall canonical_wall(int root_idx, Int level) const;
  ExtElt wall_reflection(const AffineWall& h) const;
  /// Index into delta_aff of the generator conjugate (in W_aff) to the
  /// reflection across h.
  int wall_type(const AffineWall& h) const;
  Int wall_parameter(const AffineWall& h, const ParamSys& p) const;

  /// Whether some element of the whole group maps {<a,x>=0} to {<a,x>=1}.
  bool family_transitive(int root_idx, int bound = 100000) const;

  std::vector<ParamViolation> validate_params(const ParamSys& p) const;

  /// Sum of L over any reduced word of the affine part (well-defined for
  /// valid parameter systems).
  Int weight_of(const ExtElt& e, const ParamSys& p) const;

  /// Chain of plateau conjugations ending in a strict length increase.
  /// Requires a non-translation element; nullopt when the BFS cap is hit.
  std::optional<ConjugationChain> length_increasing_conjugation(const ExtElt& e,
                                                                int cap) const;

  /// All affine-Weyl elements of length <= maxlen (no Omega twist).
  std::vector<ExtElt> waff_window(int maxlen) const;
  /// The alcove stabilizer subgroup, fully enumerated (throws BoundExceeded
  /// beyond `cap` elements).
  const std::vector<ExtElt>& omega_elements(size_t cap = 4096) const;
  /// All elements w*tau with the affine part of length <= maxlen.
  std::vector<ExtElt> window(int maxlen) const;

  const RatVec& alcove_point() const { return x0_; }
  RatVec apply_to_point(const ExtElt& e, const RatVec& x) const;

  /// Conjugation action of an alcove stabilizer on the generators: index j
  /// with tau * delta[i] * tau^{-1} == delta[j], or -1.
  int omega_conjugate_gen(const ExtElt& tau, int i) const;

private:
  std::unique_ptr<RootSystem> rs_;
  std::unique_ptr<WeylTable> wt_;
  std::unique_ptr<TranslationGroup> tg_;
  std::vector<AffineGen> delta_;
  RatVec x0_;
  std::vector<int> wall_side0_;  // sign of <root,x0> - level per generator

  std::vector<int> pos_roots_;            // indices of the positive roots
  std::vector<std::vector<char>> w_back_pos_;  // [w][i]: w^{-1}(pos_roots_[i]) > 0

  mutable std::mutex mu_;
  mutable std::unordered_map<ExtElt, int, ExtEltHash> length_cache_;
  mutable std::unordered_map<ExtElt, Gallery, ExtEltHash> gallery_cache_;
  struct PairHash {
    size_t operator()(const std::pair<ExtElt, ExtElt>& p) const {
      return ExtEltHash()(p.first) * 1000003u + ExtEltHash()(p.second);
    }
  };
  mutable std::unordered_map<std::pair<ExtElt, ExtElt>, bool, PairHash>
      bruhat_cache_;
  mutable std::vector<ExtElt> omega_list_;
  mutable bool omega_done_ = false;

  void build_delta();
  void build_alcove_point();
  int wall_side(int gen, const RatVec& x) const;
  bool bruhat_leq_aff(const ExtElt& a, const ExtElt& b) const;
};

}  // namespace hecke

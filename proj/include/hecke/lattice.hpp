#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/root_system.hpp"

namespace hecke {

/// Element of the translation group: free coordinates plus torsion residues,
/// the latter kept reduced mod the configured orders.
struct LamElt {
  IntVec free;
  IntVec tors;

  bool operator==(const LamElt& o) const { return free == o.free && tors == o.tors; }
  bool operator!=(const LamElt& o) const { return !(*this == o); }
  bool operator<(const LamElt& o) const {
    if (free != o.free) return free < o.free;
    return tors < o.tors;
  }
  bool is_zero() const { return hecke::is_zero(free) && hecke::is_zero(tors); }
  bool is_pure_torsion() const { return hecke::is_zero(free); }
};

/// The translation group Lambda = Z^n + (+) Z/d_j, with the coroot embedding
/// and the Weyl action s_a(l) = l - <a, l> a^vee (the pairing reads only the
/// free part; the coroot may carry torsion).
class TranslationGroup {
public:
  TranslationGroup(const RootSystem& rs, const WeylTable& wt,
                   std::vector<Int> torsion_orders,
                   const std::vector<LamElt>& simple_coroots);

  size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion_orders() const { return torsion_; }
  const RootSystem& roots() const { return *rs_; }
  const WeylTable& weyl() const { return *wt_; }

  LamElt zero() const { return {IntVec(free_rank_, 0), IntVec(torsion_.size(), 0)}; }
  LamElt reduce(LamElt x) const;
  LamElt add(const LamElt& a, const LamElt& b) const;
  LamElt sub(const LamElt& a, const LamElt& b) const;
  LamElt neg(const LamElt& a) const;
  LamElt scaled(Int c, const LamElt& a) const;

  /// Full coroot (free + torsion) of any root index, from the closure.
  const LamElt& coroot(int root_idx) const { return coroots_[root_idx]; }

  Int pairing(int root_idx, const LamElt& l) const {
    return dot(rs_->roots[root_idx], l.free);
  }

  /// Action of a Weyl element on a lattice element.
  LamElt act(int w, const LamElt& l) const;

  /// Generators: free unit vectors then torsion unit vectors.
  std::vector<LamElt> generators() const;

  /// Problems found while validating the configured action (braid relations on
  /// generators, involutivity, coroot span).  Empty means valid.
  const std::vector<std::string>& problems() const { return problems_; }

private:
  const RootSystem* rs_;
  const WeylTable* wt_;
  size_t free_rank_;
  std::vector<Int> torsion_;
  std::vector<LamElt> coroots_;          // per root index, closure-derived
  std::vector<IntVec> act_tors_;         // per Weyl element: k x n matrix, row-major
  std::vector<std::string> problems_;

  void close_coroots(const std::vector<LamElt>& simple_coroots);
  void build_torsion_action();
  void validate();
};

}  // namespace hecke

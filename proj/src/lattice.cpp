#include "hecke/lattice.hpp"

#include <queue>
#include <stdexcept>

namespace hecke {

namespace {
Int mod_reduce(Int x, Int d) {
  Int r = x % d;
  return r < 0 ? r + d : r;
}
}  // namespace

TranslationGroup::TranslationGroup(const RootSystem& rs, const WeylTable& wt,
                                   std::vector<Int> torsion_orders,
                                   const std::vector<LamElt>& simple_coroots)
    : rs_(&rs), wt_(&wt), free_rank_(rs.ambient_rank), torsion_(std::move(torsion_orders)) {
  for (Int d : torsion_)
    if (d < 2) problems_.push_back("torsion order must be >= 2");
  if (simple_coroots.size() != rs.num_simple())
    problems_.push_back("need one coroot per simple root");
  for (auto& c : simple_coroots) {
    if (c.free.size() != free_rank_) problems_.push_back("coroot free part has wrong dimension");
    if (c.tors.size() != torsion_.size()) problems_.push_back("coroot torsion part has wrong dimension");
  }
  if (!problems_.empty()) return;
  for (size_t j = 0; j < simple_coroots.size(); ++j)
    if (simple_coroots[j].free != rs.coroot_free[rs.simple[j]])
      problems_.push_back("coroot free part disagrees with the root system");
  if (!problems_.empty()) return;
  close_coroots(simple_coroots);
  if (!problems_.empty()) return;
  build_torsion_action();
  validate();
}

LamElt TranslationGroup::reduce(LamElt x) const {
  for (size_t j = 0; j < torsion_.size(); ++j) x.tors[j] = mod_reduce(x.tors[j], torsion_[j]);
  return x;
}

LamElt TranslationGroup::add(const LamElt& a, const LamElt& b) const {
  return reduce({hecke::add(a.free, b.free), hecke::add(a.tors, b.tors)});
}

LamElt TranslationGroup::sub(const LamElt& a, const LamElt& b) const {
  return reduce({hecke::sub(a.free, b.free), hecke::sub(a.tors, b.tors)});
}

LamElt TranslationGroup::neg(const LamElt& a) const {
  return reduce({negate(a.free), negate(a.tors)});
}

LamElt TranslationGroup::scaled(Int c, const LamElt& a) const {
  return reduce({scale(c, a.free), scale(c, a.tors)});
}

void TranslationGroup::close_coroots(const std::vector<LamElt>& simple_coroots) {
  size_t N = rs_->size();
  coroots_.assign(N, zero());
  std::vector<bool> have(N, false);
  std::queue<int> bfs;
  for (size_t j = 0; j < rs_->num_simple(); ++j) {
    int idx = rs_->simple[j];
    coroots_[idx] = reduce(simple_coroots[j]);
    have[idx] = true;
    bfs.push(idx);
  }
  while (!bfs.empty()) {
    int b = bfs.front();
    bfs.pop();
    for (size_t j = 0; j < rs_->num_simple(); ++j) {
      int sj = rs_->simple[j];
      int img = wt_->apply(wt_->simple_reflection(j), b);
      Int pair = dot(rs_->roots[sj], coroots_[b].free);
      LamElt img_co = sub(coroots_[b], scaled(pair, coroots_[sj]));
      if (have[img]) {
        if (!(coroots_[img] == img_co)) {
          problems_.push_back("inconsistent torsion in coroot closure");
          return;
        }
      } else {
        coroots_[img] = img_co;
        have[img] = true;
        bfs.push(img);
      }
    }
  }
}

void TranslationGroup::build_torsion_action() {
  size_t n = free_rank_, k = torsion_.size();
  act_tors_.assign(wt_->size(), IntVec(k * n, 0));
  for (size_t w = 0; w < wt_->size(); ++w) {
    auto letters = wt_->word(static_cast<int>(w));
    for (size_t col = 0; col < n; ++col) {
      LamElt x = zero();
      x.free[col] = 1;
      // w = s_{l0} s_{l1} ... applied to x from the right end of the word
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        int sj = rs_->simple[*it];
        Int pair = dot(rs_->roots[sj], x.free);
        x = sub(x, scaled(pair, coroots_[sj]));
      }
      for (size_t row = 0; row < k; ++row) act_tors_[w][row * n + col] = x.tors[row];
    }
  }
}

LamElt TranslationGroup::act(int w, const LamElt& l) const {
  LamElt out;
  out.free = wt_->act_free(w, l.free);
  size_t n = free_rank_, k = torsion_.size();
  out.tors = l.tors;
  for (size_t row = 0; row < k; ++row)
    for (size_t col = 0; col < n; ++col)
      out.tors[row] += act_tors_[w][row * n + col] * l.free[col];
  return reduce(out);
}

std::vector<LamElt> TranslationGroup::generators() const {
  std::vector<LamElt> g;
  for (size_t i = 0; i < free_rank_; ++i) {
    LamElt x = zero();
    x.free[i] = 1;
    g.push_back(x);
  }
  for (size_t j = 0; j < torsion_.size(); ++j) {
    LamElt x = zero();
    x.tors[j] = 1;
    g.push_back(x);
  }
  return g;
}

void TranslationGroup::validate() {
  auto gens = generators();
  // involutivity of each simple action
  for (size_t j = 0; j < rs_->num_simple(); ++j) {
    int s = wt_->simple_reflection(j);
    for (auto& g : gens)
      if (!(act(s, act(s, g)) == g)) {
        problems_.push_back("simple action is not an involution");
        return;
      }
  }
  // braid relations: (s_i s_j)^m acts trivially, m the order in W
  for (size_t i = 0; i < rs_->num_simple(); ++i)
    for (size_t j = i + 1; j < rs_->num_simple(); ++j) {
      int si = wt_->simple_reflection(i), sj = wt_->simple_reflection(j);
      int prod = wt_->mult(si, sj);
      int m = 1, cur = prod;
      while (cur != wt_->identity() && m < 64) {
        cur = wt_->mult(cur, prod);
        ++m;
      }
      for (auto& g : gens) {
        LamElt x = g;
        for (int t = 0; t < m; ++t) x = act(si, act(sj, x));
        if (!(x == g)) {
          problems_.push_back("braid relation fails on the translation group");
          return;
        }
      }
    }
  // coroot free parts span the same Q-subspace as the roots demand
  std::vector<IntVec> co, ro;
  for (size_t i = 0; i < rs_->size(); ++i) {
    co.push_back(coroots_[i].free);
    ro.push_back(rs_->roots[i]);
  }
  if (int_rank(co) != int_rank(ro))
    problems_.push_back("coroot free parts do not span the coroot space");
}

}  // namespace hecke

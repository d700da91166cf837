#include "hecke/ext_weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <set>

namespace hecke {

GroupContext::GroupContext(const RootSystem& rs, std::vector<Int> torsion_orders,
                           const std::vector<LamElt>& simple_coroots) {
  rs_ = std::make_unique<RootSystem>(rs);
  wt_ = std::make_unique<WeylTable>(*rs_);
  tg_ = std::make_unique<TranslationGroup>(*rs_, *wt_, std::move(torsion_orders),
                                           simple_coroots);
  if (!tg_->problems().empty()) throw BuildError{tg_->problems()};
  for (size_t r = 0; r < rs_->size(); ++r)
    if (rs_->positive[r]) pos_roots_.push_back(static_cast<int>(r));
  w_back_pos_.resize(wt_->size());
  for (size_t w = 0; w < wt_->size(); ++w) {
    int wi = wt_->inverse(static_cast<int>(w));
    for (int r : pos_roots_)
      w_back_pos_[w].push_back(rs_->positive[wt_->apply(wi, r)] ? 1 : 0);
  }
  build_delta();
  build_alcove_point();
}

ExtElt GroupContext::mul(const ExtElt& a, const ExtElt& b) const {
  return {tg_->add(a.lam, tg_->act(a.w, b.lam)), wt_->mult(a.w, b.w)};
}

ExtElt GroupContext::inv(const ExtElt& a) const {
  int wi = wt_->inverse(a.w);
  return {tg_->neg(tg_->act(wi, a.lam)), wi};
}

int GroupContext::length(const ExtElt& e) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = length_cache_.find(e);
    if (it != length_cache_.end()) return it->second;
  }
  Int len = 0;
  const auto& flags = w_back_pos_[e.w];
  for (size_t i = 0; i < pos_roots_.size(); ++i) {
    Int p = dot(rs_->roots[pos_roots_[i]], e.lam.free);
    len += flags[i] ? (p < 0 ? -p : p) : (p - 1 < 0 ? 1 - p : p - 1);
  }
  int out = static_cast<int>(len);
  std::lock_guard<std::mutex> lk(mu_);
  length_cache_.emplace(e, out);
  return out;
}

void GroupContext::build_delta() {
  for (size_t j = 0; j < rs_->num_simple(); ++j) {
    AffineGen g;
    g.name = "s" + std::to_string(j + 1);
    g.elt = finite(wt_->simple_reflection(j));
    g.root_idx = rs_->simple[j];
    g.level = 0;
    g.finite = true;
    g.simple_pos = static_cast<int>(j);
    delta_.push_back(std::move(g));
  }
  for (size_t c = 0; c < rs_->num_components(); ++c) {
    AffineGen g;
    g.name = "s0" + std::string(c, '\'');
    int theta = rs_->highest[c];
    g.elt = {tg_->coroot(theta), wt_->reflection(theta)};
    g.root_idx = theta;
    g.level = 1;
    g.finite = false;
    g.simple_pos = -1;
    delta_.push_back(std::move(g));
  }
}

void GroupContext::build_alcove_point() {
  size_t n = rs_->ambient_rank;
  std::vector<IntVec> rows;
  std::vector<Rat> rhs;
  std::vector<Int> comp_h(rs_->num_components());
  for (size_t c = 0; c < rs_->num_components(); ++c)
    comp_h[c] = rs_->height(rs_->highest[c]);
  for (size_t j = 0; j < rs_->num_simple(); ++j) {
    int idx = rs_->simple[j];
    rows.push_back(rs_->roots[idx]);
    rhs.push_back(Rat(1, comp_h[rs_->component[idx]] + 1));
  }
  auto sol = solve_rational(rows, rhs, n);
  if (!sol) throw std::logic_error("alcove point: inconsistent system");
  x0_ = *sol;
  wall_side0_.resize(delta_.size());
  for (size_t g = 0; g < delta_.size(); ++g)
    wall_side0_[g] = wall_side(static_cast<int>(g), x0_);
}

RatVec GroupContext::apply_to_point(const ExtElt& e, const RatVec& x) const {
  RatVec y = wt_->act_free(e.w, x);
  for (size_t i = 0; i < y.size(); ++i) y[i] += Rat(e.lam.free[i]);
  return y;
}

int GroupContext::wall_side(int gen, const RatVec& x) const {
  Rat v = dot(rs_->roots[delta_[gen].root_idx], x) - Rat(delta_[gen].level);
  if (v > Rat(0)) return 1;
  if (v < Rat(0)) return -1;
  return 0;
}

Gallery GroupContext::gallery(const ExtElt& e) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = gallery_cache_.find(e);
    if (it != gallery_cache_.end()) return it->second;
  }
  Gallery out;
  ExtElt v = e;
  int guard = length(e) + 1;
  while (true) {
    RatVec y = apply_to_point(v, x0_);
    int moved = -1;
    for (size_t g = 0; g < delta_.size(); ++g) {
      int s = wall_side(static_cast<int>(g), y);
      if (s == 0) throw std::logic_error("gallery: point on a wall");
      if (s != wall_side0_[g]) {
        moved = static_cast<int>(g);
        break;
      }
    }
    if (moved < 0) break;
    v = mul(delta_[moved].elt, v);
    out.word.push_back(moved);
    if (--guard < 0) throw std::logic_error("gallery: did not terminate");
  }
  out.omega = v;
  if (static_cast<int>(out.word.size()) != length(e))
    throw std::logic_error("gallery: word length disagrees with closed formula");
  std::lock_guard<std::mutex> lk(mu_);
  gallery_cache_.emplace(e, out);
  return out;
}

bool GroupContext::bruhat_leq_aff(const ExtElt& a, const ExtElt& b) const {
  if (a == b) return true;
  int la = length(a), lb = length(b);
  if (la > lb || lb == 0) return false;
  auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = bruhat_cache_.find(key);
    if (it != bruhat_cache_.end()) return it->second;
  }
  bool out = false;
  for (size_t g = 0; g < delta_.size(); ++g) {
    ExtElt gb = mul(delta_[g].elt, b);
    if (length(gb) < lb) {
      ExtElt ga = mul(delta_[g].elt, a);
      out = (length(ga) < la) ? bruhat_leq_aff(ga, gb) : bruhat_leq_aff(a, gb);
      std::lock_guard<std::mutex> lk(mu_);
      bruhat_cache_.emplace(key, out);
      return out;
    }
  }
  throw std::logic_error("bruhat: no descent found");
}

bool GroupContext::bruhat_leq(const ExtElt& a, const ExtElt& b) const {
  Gallery ga = gallery(a), gb = gallery(b);
  if (ga.omega != gb.omega) return false;
  return bruhat_leq_aff(mul(a, inv(ga.omega)), mul(b, inv(gb.omega)));
}

bool GroupContext::is_dominant(const LamElt& l) const {
  for (int s : rs_->simple)
    if (dot(rs_->roots[s], l.free) < 0) return false;
  return true;
}

std::pair<LamElt, LamElt> GroupContext::dominant_decompose(const LamElt& l) const {
  LamElt lam = tg_->reduce(l);
  if (rs_->num_simple() == 0 || is_dominant(lam)) return {lam, tg_->zero()};
  IntVec rho2 = rs_->two_rho_coroot();
  Int k = 0;
  for (int s : rs_->simple) {
    Int p = dot(rs_->roots[s], lam.free);
    Int q = dot(rs_->roots[s], rho2);
    if (q <= 0) throw std::logic_error("2rho-coroot pairing not positive");
    if (p < 0) {
      Int need = (-p + q - 1) / q;  // ceil(-p / q)
      k = std::max(k, need);
    }
  }
  LamElt second{rho2, IntVec(tg_->torsion_orders().size(), 0)};
  second = tg_->scaled(k, second);
  return {tg_->add(lam, second), second};
}

std::pair<LamElt, LamElt> GroupContext::small_decompose(const LamElt& l) const {
  LamElt l1 = tg_->reduce(l), l2 = tg_->zero();
  for (size_t round = 0; round < 2 * rs_->num_simple() + 2; ++round) {
    if (is_dominant(l1)) return {l1, l2};
    LamElt mu;
    bool found = false;
    for (auto& m : weyl_orbit(tg_->neg(l1)))
      if (is_dominant(m)) {
        mu = m;
        found = true;
        break;
      }
    if (!found) break;
    l1 = tg_->add(l1, mu);
    l2 = tg_->add(l2, mu);
  }
  auto [a, b] = dominant_decompose(l1);
  return {a, tg_->add(l2, b)};
}

std::vector<LamElt> GroupContext::weyl_orbit(const LamElt& l) const {
  std::set<LamElt> seen{tg_->reduce(l)};
  std::queue<LamElt> bfs;
  bfs.push(tg_->reduce(l));
  while (!bfs.empty()) {
    LamElt x = bfs.front();
    bfs.pop();
    for (size_t j = 0; j < rs_->num_simple(); ++j) {
      LamElt y = tg_->act(wt_->simple_reflection(j), x);
      if (seen.insert(y).second) bfs.push(y);
    }
  }
  return {seen.begin(), seen.end()};
}

int GroupContext::coxeter_m(int i, int j) const {
  ExtElt p = mul(delta_[i].elt, delta_[j].elt);
  ExtElt cur = p;
  for (int m = 1; m <= 24; ++m) {
    if (cur == one()) return m;
    cur = mul(cur, p);
  }
  return -1;
}

AffineWall GroupContext::canonical_wall(int root_idx, Int level) const {
  if (!rs_->positive[root_idx]) return {rs_->negation[root_idx], -level};
  return {root_idx, level};
}

ExtElt GroupContext::wall_reflection(const AffineWall& h) const {
  return {tg_->scaled(h.level, tg_->coroot(h.root_idx)), wt_->reflection(h.root_idx)};
}

int GroupContext::wall_type(const AffineWall& h) const {
  ExtElt r = wall_reflection(canonical_wall(h.root_idx, h.level));
  while (true) {
    for (size_t g = 0; g < delta_.size(); ++g)
      if (r == delta_[g].elt) return static_cast<int>(g);
    int lr = length(r);
    bool moved = false;
    for (size_t g = 0; g < delta_.size() && !moved; ++g) {
      ExtElt r2 = conj(delta_[g].elt, r);
      if (length(r2) == lr - 2) {
        r = r2;
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("wall_type: descent failed");
  }
}

Int GroupContext::wall_parameter(const AffineWall& h, const ParamSys& p) const {
  return p.weight.at(wall_type(h));
}

bool GroupContext::family_transitive(int root_idx, int bound) const {
  // gcd of all pairings of this family's root with the free lattice
  Int g = 0;
  for (Int c : rs_->roots[root_idx]) g = std::gcd(g, c < 0 ? -c : c);
  Int mod = 2 * g;
  auto canon = [&](int r, Int k) -> std::pair<int, Int> {
    if (!rs_->positive[r]) {
      r = rs_->negation[r];
      k = -k;
    }
    if (mod > 0) k = ((k % mod) + mod) % mod;
    return {r, k};
  };
  auto start = canon(root_idx, 0);
  auto target = canon(root_idx, 1);
  std::set<std::pair<int, Int>> seen{start};
  std::queue<std::pair<int, Int>> bfs;
  bfs.push(start);
  int visited = 0;
  while (!bfs.empty()) {
    auto [r, k] = bfs.front();
    bfs.pop();
    if (++visited > bound)
      throw DomainError("BoundExceeded",
                        "wall-orbit exploration exceeded bound " + std::to_string(bound));
    if (std::make_pair(r, k) == target) return true;
    std::vector<std::pair<int, Int>> next;
    for (size_t j = 0; j < rs_->num_simple(); ++j)
      next.push_back(canon(wt_->apply(wt_->simple_reflection(j), r), k));
    for (size_t i = 0; i < rs_->ambient_rank; ++i) {
      Int step = rs_->roots[r][i];
      next.push_back(canon(r, k + step));
      next.push_back(canon(r, k - step));
    }
    for (auto& st : next)
      if (seen.insert(st).second) bfs.push(st);
  }
  return seen.count(target) > 0;
}

std::vector<ParamViolation> GroupContext::validate_params(const ParamSys& p) const {
  std::vector<ParamViolation> out;
  if (p.weight.size() != delta_.size()) {
    out.push_back({"", "", "parameter list does not match the affine generators"});
    return out;
  }
  for (size_t i = 0; i < delta_.size(); ++i)
    if (p.weight[i] < 1)
      out.push_back({delta_[i].name, "", "weight must be a positive integer"});
  for (size_t i = 0; i < delta_.size(); ++i)
    for (size_t j = i + 1; j < delta_.size(); ++j) {
      int m = coxeter_m(static_cast<int>(i), static_cast<int>(j));
      if (m > 0 && m % 2 == 1 && p.weight[i] != p.weight[j])
        out.push_back({delta_[i].name, delta_[j].name,
                       "joined by an odd braid edge (m=" + std::to_string(m) + ")"});
    }
  for (auto& gen : tg_->generators()) {
    ExtElt tau = omega_projection(translation(gen));
    for (size_t i = 0; i < delta_.size(); ++i) {
      int j = omega_conjugate_gen(tau, static_cast<int>(i));
      if (j < 0) {
        out.push_back({delta_[i].name, "",
                       "alcove-stabilizer conjugate is not a generator"});
        continue;
      }
      if (p.weight[i] != p.weight[j])
        out.push_back({delta_[i].name, delta_[j].name,
                       "identified by an alcove-stabilizer permutation"});
    }
  }
  return out;
}

int GroupContext::omega_conjugate_gen(const ExtElt& tau, int i) const {
  ExtElt c = conj(tau, delta_[i].elt);
  for (size_t j = 0; j < delta_.size(); ++j)
    if (c == delta_[j].elt) return static_cast<int>(j);
  return -1;
}

Int GroupContext::weight_of(const ExtElt& e, const ParamSys& p) const {
  Gallery g = gallery(e);
  Int w = 0;
  for (int idx : g.word) w += p.weight[idx];
  return w;
}

std::optional<ConjugationChain> GroupContext::length_increasing_conjugation(
    const ExtElt& e, int cap) const {
  if (e.w == wt_->identity())
    throw DomainError("NotATranslationRequired",
                      "element is a translation; the chain lemma needs a "
                      "non-translation");
  int l0 = length(e);
  struct Node {
    ExtElt x;
    std::vector<int> path;
  };
  std::set<ExtElt> seen{e};
  std::deque<Node> bfs{{e, {}}};
  while (!bfs.empty()) {
    Node cur = bfs.front();
    bfs.pop_front();
    for (size_t g = 0; g < delta_.size(); ++g) {
      ExtElt c = mul(delta_[g].elt, mul(cur.x, delta_[g].elt));
      int lc = length(c);
      if (lc > l0) return ConjugationChain{cur.path, static_cast<int>(g)};
      if (lc == l0 && static_cast<int>(cur.path.size()) < cap &&
          seen.insert(c).second) {
        Node nxt{c, cur.path};
        nxt.path.push_back(static_cast<int>(g));
        bfs.push_back(std::move(nxt));
      }
    }
  }
  return std::nullopt;
}

std::vector<ExtElt> GroupContext::waff_window(int maxlen) const {
  std::set<ExtElt> seen{one()};
  std::vector<ExtElt> frontier{one()}, out{one()};
  for (int l = 1; l <= maxlen; ++l) {
    std::vector<ExtElt> next;
    for (auto& w : frontier)
      for (auto& g : delta_) {
        ExtElt x = mul(w, g.elt);
        if (length(x) != l) continue;
        if (seen.insert(x).second) next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

const std::vector<ExtElt>& GroupContext::omega_elements(size_t cap) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (omega_done_) return omega_list_;
  }
  std::vector<ExtElt> gens;
  for (auto& g : tg_->generators()) {
    ExtElt tau = omega_projection(translation(g));
    gens.push_back(tau);
    gens.push_back(inv(tau));
  }
  std::set<ExtElt> seen{one()};
  std::queue<ExtElt> bfs;
  bfs.push(one());
  while (!bfs.empty()) {
    ExtElt x = bfs.front();
    bfs.pop();
    for (auto& g : gens) {
      ExtElt y = mul(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw DomainError("BoundExceeded",
                            "alcove stabilizer exceeds enumeration cap");
        bfs.push(y);
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  omega_list_.assign(seen.begin(), seen.end());
  omega_done_ = true;
  return omega_list_;
}

std::vector<ExtElt> GroupContext::window(int maxlen) const {
  auto base = waff_window(maxlen);
  auto& om = omega_elements();
  std::vector<ExtElt> out;
  out.reserve(base.size() * om.size());
  for (auto& w : base)
    for (auto& t : om) out.push_back(mul(w, t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hecke

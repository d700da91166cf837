#include "hecke/algebra.hpp"

#include <algorithm>

namespace hecke {

Algebra::Algebra(std::shared_ptr<const GroupContext> group, ParamSys params)
    : group_(std::move(group)), params_(std::move(params)) {
  auto viol = group_->validate_params(params_);
  if (!viol.empty()) {
    std::vector<std::string> msgs;
    for (auto& v : viol) msgs.push_back(v.gen_a + "/" + v.gen_b + ": " + v.reason);
    throw BuildError{msgs};
  }
}

HeckeElt Algebra::basis(const ExtElt& w) const {
  HeckeElt h;
  h.add_term(w, LaurentInt(1));
  return h;
}

void Algebra::check_element(const HeckeElt& h) const {
  for (auto& [w, c] : h.terms) {
    (void)c;
    if (w.lam.free.size() != group_->lattice().free_rank() ||
        w.lam.tors.size() != group_->lattice().torsion_orders().size())
      throw DomainError("ContextMismatch",
                        "element does not belong to this algebra");
    break;
  }
}

HeckeElt Algebra::gen_mul_left(int gen, const HeckeElt& h) const {
  const auto& g = group_->delta_aff()[gen];
  LaurentInt q = LaurentInt::v_power(2 * static_cast<int>(params_.weight[gen]));
  LaurentInt qm1 = q - LaurentInt(1);
  HeckeElt out;
  for (auto& [x, c] : h.terms) {
    ExtElt sx = group_->mul(g.elt, x);
    if (group_->length(sx) > group_->length(x)) {
      out.add_term(sx, c);
    } else {
      out.add_term(x, qm1 * c);
      out.add_term(sx, q * c);
    }
  }
  return out;
}

HeckeElt Algebra::gen_mul_right(const HeckeElt& h, int gen) const {
  const auto& g = group_->delta_aff()[gen];
  LaurentInt q = LaurentInt::v_power(2 * static_cast<int>(params_.weight[gen]));
  LaurentInt qm1 = q - LaurentInt(1);
  HeckeElt out;
  for (auto& [x, c] : h.terms) {
    ExtElt xs = group_->mul(x, g.elt);
    if (group_->length(xs) > group_->length(x)) {
      out.add_term(xs, c);
    } else {
      out.add_term(x, qm1 * c);
      out.add_term(xs, q * c);
    }
  }
  return out;
}

HeckeElt Algebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  check_element(a);
  check_element(b);
  HeckeElt out;
  for (auto& [w, c] : a.terms) {
    Gallery gal = group_->gallery(w);
    // T_w * b with T_w = T_{s_1} ... T_{s_k} T_tau
    HeckeElt cur;
    for (auto& [x, cx] : b.terms) cur.add_term(group_->mul(gal.omega, x), cx);
    for (auto it = gal.word.rbegin(); it != gal.word.rend(); ++it)
      cur = gen_mul_left(*it, cur);
    out += cur.scaled(c);
  }
  return out;
}

HeckeElt Algebra::basis_inverse(const ExtElt& w) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = inverse_cache_.find(w);
    if (it != inverse_cache_.end()) return it->second;
  }
  Gallery gal = group_->gallery(w);
  // T_w^{-1} = T_{tau^{-1}} * T_{s_k}^{-1} * ... * T_{s_1}^{-1}; one fold step
  // h * T_s^{-1} expands to  qi*(h*T_s) + (qi-1)*h  and the descending case
  // telescopes to a bare shift.
  HeckeElt h = basis(group_->inv(gal.omega));
  for (auto it = gal.word.rbegin(); it != gal.word.rend(); ++it) {
    const auto& g = group_->delta_aff()[*it];
    LaurentInt qi = LaurentInt::v_power(-2 * static_cast<int>(params_.weight[*it]));
    LaurentInt qim1 = qi - LaurentInt(1);
    HeckeElt out;
    for (auto& [x, c] : h.terms) {
      ExtElt xs = group_->mul(x, g.elt);
      if (group_->length(xs) > group_->length(x)) {
        out.add_term(xs, qi * c);
        out.add_term(x, qim1 * c);
      } else {
        out.add_term(xs, c);
      }
    }
    h = std::move(out);
  }
  std::lock_guard<std::mutex> lk(mu_);
  inverse_cache_.emplace(w, h);
  return h;
}

HeckeElt Algebra::theta_via(const LamElt& l1, const LamElt& l2) const {
  if (!group_->is_dominant(l1) || !group_->is_dominant(l2))
    throw DomainError("NotDominant", "theta decomposition parts must be dominant");
  ExtElt t1 = group_->translation(l1), t2 = group_->translation(l2);
  HeckeElt a = basis(t1).scaled(LaurentInt::v_power(-static_cast<int>(weight(t1))));
  HeckeElt b =
      basis_inverse(t2).scaled(LaurentInt::v_power(static_cast<int>(weight(t2))));
  return mul(a, b);
}

HeckeElt Algebra::theta(const LamElt& lambda) const {
  LamElt key = group_->lattice().reduce(lambda);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = theta_cache_.find(key);
    if (it != theta_cache_.end()) return it->second;
  }
  auto [l1, l2] = group_->small_decompose(key);
  HeckeElt out = theta_via(l1, l2);
  std::lock_guard<std::mutex> lk(mu_);
  theta_cache_.emplace(key, out);
  return out;
}

bool Algebra::theta_additive(const LamElt& l, const LamElt& m) const {
  return mul(theta(l), theta(m)) == theta(group_->lattice().add(l, m));
}

BernsteinForm Algebra::commutation_rhs_bern(int simple_pos,
                                            const LamElt& lambda) const {
  const auto& rs = group_->roots();
  int alpha = rs.simple[simple_pos];
  Int n = dot(rs.roots[alpha], lambda.free);
  BernsteinForm out;
  if (n == 0) return out;
  Int ls = params_.weight[simple_pos];
  Int lt = group_->wall_parameter(group_->canonical_wall(alpha, 1), params_);
  LaurentInt g0 = LaurentInt::v_power(static_cast<int>(2 * ls)) - LaurentInt(1);
  LaurentInt g1 = LaurentInt::v_power(static_cast<int>(ls + lt)) -
                  LaurentInt::v_power(static_cast<int>(ls - lt));
  const LamElt& covee = group_->lattice().coroot(alpha);
  auto add = [&](Int j, const LaurentInt& c) {
    LamElt mu = group_->lattice().sub(lambda, group_->lattice().scaled(j, covee));
    BernsteinKey key{mu, group_->weyl().identity()};
    auto it = out.find(key);
    if (it == out.end()) {
      if (!c.is_zero()) out.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  if (n > 0) {
    for (Int j = 0; j < n; ++j) add(j, (j % 2 == 0) ? g0 : g1);
  } else {
    for (Int j = n; j < 0; ++j) add(j, -(((j % 2) + 2) % 2 == 0 ? g0 : g1));
  }
  return out;
}

HeckeElt Algebra::commutation_rhs(int simple_pos, const LamElt& lambda) const {
  return from_bernstein(commutation_rhs_bern(simple_pos, lambda));
}

bool Algebra::commutation_check(int simple_pos, const LamElt& lambda) const {
  ExtElt s = group_->delta_aff()[simple_pos].elt;
  LamElt sl = group_->lattice().act(s.w, lambda);
  HeckeElt lhs = mul(basis(s), theta(lambda)) - mul(theta(sl), basis(s));
  return lhs == commutation_rhs(simple_pos, lambda);
}

namespace {
void bern_add(BernsteinForm& out, const BernsteinKey& k, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto it = out.find(k);
  if (it == out.end()) {
    out.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}
}  // namespace

BernsteinForm Algebra::bern_right_mul_simple(const BernsteinForm& b,
                                             int simple_pos) const {
  const auto& wt = group_->weyl();
  int s = wt.simple_reflection(simple_pos);
  LaurentInt q = LaurentInt::v_power(2 * static_cast<int>(params_.weight[simple_pos]));
  LaurentInt qm1 = q - LaurentInt(1);
  BernsteinForm out;
  for (auto& [key, c] : b) {
    int y = key.second;
    int ys = wt.mult(y, s);
    if (wt.length(ys) > wt.length(y)) {
      bern_add(out, {key.first, ys}, c);
    } else {
      bern_add(out, {key.first, y}, qm1 * c);
      bern_add(out, {key.first, ys}, q * c);
    }
  }
  return out;
}

BernsteinForm Algebra::bern_left_mul_simple(int simple_pos,
                                            const BernsteinForm& b) const {
  const auto& wt = group_->weyl();
  int s = wt.simple_reflection(simple_pos);
  LaurentInt q = LaurentInt::v_power(2 * static_cast<int>(params_.weight[simple_pos]));
  LaurentInt qm1 = q - LaurentInt(1);
  BernsteinForm out;
  for (auto& [key, c] : b) {
    const LamElt& nu = key.first;
    int y = key.second;
    LamElt snu = group_->lattice().act(s, nu);
    // T_s * Theta_nu * T_y = Theta_{s(nu)} * (T_s T_y) + (commutation) * T_y
    int sy = wt.mult(s, y);
    if (wt.length(sy) > wt.length(y)) {
      bern_add(out, {snu, sy}, c);
    } else {
      bern_add(out, {snu, y}, qm1 * c);
      bern_add(out, {snu, sy}, q * c);
    }
    for (auto& [k2, c2] : commutation_rhs_bern(simple_pos, nu))
      bern_add(out, {k2.first, y}, c2 * c);
  }
  return out;
}

BernsteinForm Algebra::expand_basis(const ExtElt& x) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = expand_cache_.find(x);
    if (it != expand_cache_.end()) return it->second;
  }
  const auto& wt = group_->weyl();
  const auto& tg = group_->lattice();
  const auto& rs = group_->roots();

  // raise the translation part: w with w^{-1}(lambda) dominant
  LamElt v = x.lam;
  int w = wt.identity();
  while (true) {
    bool moved = false;
    for (size_t j = 0; j < rs.num_simple(); ++j)
      if (dot(rs.roots[rs.simple[j]], v.free) < 0) {
        v = tg.act(wt.simple_reflection(j), v);
        w = wt.mult(w, wt.simple_reflection(j));
        moved = true;
        break;
      }
    if (!moved) break;
  }

  BernsteinForm out;
  if (x.w == w) {
    // T_{(lambda, w)} = T_w * T_{t_v} = v^{L(t_v)} * T_w * Theta_v
    out.emplace(BernsteinKey{v, wt.identity()}, LaurentInt(1));
    auto word = wt.word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      out = bern_left_mul_simple(*it, out);
    LaurentInt scalef =
        LaurentInt::v_power(static_cast<int>(weight(group_->translation(v))));
    for (auto& [k, c] : out) c = c * scalef;
  } else {
    // peel the last letter of w^{-1} * x.w
    int rest = wt.mult(wt.inverse(w), x.w);
    auto word = wt.word(rest);
    int j = word.back();
    int s = wt.simple_reflection(j);
    ExtElt x2{x.lam, wt.mult(x.w, s)};
    BernsteinForm e = expand_basis(x2);
    BernsteinForm f = bern_right_mul_simple(e, j);
    if (group_->length(x) > group_->length(x2)) {
      out = std::move(f);
    } else {
      // T_{x2} T_s = (q-1) T_{x2} + q T_x   =>   T_x = q^{-1} (F - (q-1) E)
      LaurentInt qi =
          LaurentInt::v_power(-2 * static_cast<int>(params_.weight[j]));
      LaurentInt b = LaurentInt::v_power(2 * static_cast<int>(params_.weight[j])) -
                     LaurentInt(1);
      for (auto& [k, c] : e) bern_add(f, k, -(b * c));
      for (auto& [k, c] : f) c = c * qi;
      out = std::move(f);
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  expand_cache_.emplace(x, out);
  return out;
}

BernsteinForm Algebra::to_bernstein(const HeckeElt& h) const {
  check_element(h);
  BernsteinForm out;
  for (auto& [x, c] : h.terms)
    for (auto& [k, c2] : expand_basis(x)) bern_add(out, k, c * c2);
  return out;
}

HeckeElt Algebra::from_bernstein(const BernsteinForm& coeffs) const {
  HeckeElt out;
  for (auto& [k, c] : coeffs)
    out += mul(theta(k.first), basis(group_->finite(k.second))).scaled(c);
  return out;
}

HeckeElt Algebra::central_element(const std::vector<LamElt>& orbit) const {
  HeckeElt out;
  for (auto& l : orbit) out += theta(l);
  return out;
}

std::vector<std::pair<std::string, ExtElt>> Algebra::centrality_generators()
    const {
  std::vector<std::pair<std::string, ExtElt>> gens;
  for (int i = 0; i < group_->delta_size(); ++i)
    gens.emplace_back(group_->delta_aff()[i].name, group_->delta_aff()[i].elt);
  int k = 0;
  for (auto& g : group_->lattice().generators()) {
    ExtElt tau = group_->omega_projection(group_->translation(g));
    gens.emplace_back("omega" + std::to_string(k++), tau);
  }
  return gens;
}

CenterDecomposition Algebra::center_decompose(const HeckeElt& h) const {
  check_element(h);
  CenterDecomposition out;
  for (auto& [name, g] : centrality_generators()) {
    HeckeElt c = mul(h, basis(g)) - mul(basis(g), h);
    if (!c.is_zero()) {
      out.central = false;
      out.witness_generator = name;
      out.witness_commutator = std::move(c);
      return out;
    }
  }
  out.central = true;
  HeckeElt work = h;
  while (!work.is_zero()) {
    // maximal-length dominant translation in the support
    const ExtElt* pick = nullptr;
    for (auto& [x, c] : work.terms) {
      (void)c;
      if (x.w != group_->weyl().identity()) continue;
      if (!group_->is_dominant(x.lam)) continue;
      if (!pick || group_->length(x) > group_->length(*pick)) pick = &x;
    }
    if (!pick)
      throw DomainError("ResidueNonzero",
                        "no dominant translation left in a nonzero residue");
    ExtElt top = *pick;
    LaurentInt c =
        work.coeff(top) * LaurentInt::v_power(static_cast<int>(weight(top)));
    auto orbit = group_->weyl_orbit(top.lam);
    work -= central_element(orbit).scaled(c);
    if (!work.coeff(top).is_zero())
      throw DomainError("ResidueNonzero", "peeling failed to clear the top term");
    LamElt key = orbit.front();  // lexicographically least element
    auto it = out.coeffs.find(key);
    if (it == out.coeffs.end()) {
      out.coeffs.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.coeffs.erase(it);
    }
  }
  return out;
}

std::shared_ptr<Algebra> Algebra::torsion_free_quotient() const {
  const auto& rs = group_->roots();
  std::vector<LamElt> simple_coroots;
  for (size_t j = 0; j < rs.num_simple(); ++j)
    simple_coroots.push_back({rs.coroot_free[rs.simple[j]], {}});
  auto g = std::make_shared<GroupContext>(rs, std::vector<Int>{}, simple_coroots);
  return std::make_shared<Algebra>(g, params_);
}

ExtElt Algebra::quotient_elt(const ExtElt& w, const Algebra& target) const {
  if (target.group().lattice().free_rank() != group_->lattice().free_rank() ||
      !target.group().lattice().torsion_orders().empty())
    throw DomainError("ContextMismatch", "target is not the torsion-free quotient");
  return {{w.lam.free, {}}, w.w};
}

HeckeElt Algebra::quotient_map(const HeckeElt& h, const Algebra& target) const {
  check_element(h);
  HeckeElt out;
  for (auto& [w, c] : h.terms) out.add_term(quotient_elt(w, target), c);
  return out;
}

std::map<ExtElt, Int> Algebra::at_v1(const HeckeElt& h) const {
  std::map<ExtElt, Int> out;
  for (auto& [w, c] : h.terms) {
    Int x = c.eval_at_one();
    if (x != 0) out[w] = x;
  }
  return out;
}

}  // namespace hecke

#include "hecke/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hecke/format.hpp"

namespace hecke {

bool VerificationReport::all_pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerificationReport::table() const {
  std::ostringstream out;
  out << "fixture: " << fixture << "  window: " << window << "  seed: " << seed
      << "\n";
  size_t width = 0;
  for (auto& c : checks) width = std::max(width, c.name.size());
  for (auto& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
        << std::string(width - c.name.size() + 2, ' ') << "checked=" << c.checked;
    if (!c.detail.empty()) out << "  " << c.detail;
    if (!c.pass) out << "\n       counterexample: " << c.counterexample;
    out << "\n";
  }
  out << (all_pass() ? "RESULT: all checks passed" : "RESULT: FAILURES PRESENT")
      << "\n";
  return out.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["fixture"] = fixture;
  j["window"] = window;
  j["seed"] = seed;
  j["all_pass"] = all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["checked"] = c.checked;
    jc["detail"] = c.detail;
    if (!c.pass) jc["counterexample"] = c.counterexample;
    j["checks"].push_back(jc);
  }
  return j;
}

CheckResult group_algebra_oracle(const Algebra& a, int window,
                                 const BasisProduct& product) {
  const auto& g = a.group();
  BasisProduct mul = product;
  if (!mul)
    mul = [](const Algebra& al, const ExtElt& x, const ExtElt& y) {
      return al.mul(al.basis(x), al.basis(y));
    };
  CheckResult r;
  r.name = "group_algebra_oracle_v1";
  r.detail = "window " + std::to_string(window);
  auto win = g.window(window);
  for (auto& x : win)
    for (auto& y : win) {
      ++r.checked;
      ExtElt expect = g.mul(x, y);  // direct group multiplication
      auto spec = a.at_v1(mul(a, x, y));
      bool ok = spec.size() == 1 && spec.begin()->first == expect &&
                spec.begin()->second == 1;
      if (!ok) {
        r.pass = false;
        r.counterexample = "T[" + render_ext(g, x) + "] * T[" + render_ext(g, y) +
                           "] at v=1 is not the group product T[" +
                           render_ext(g, expect) + "]";
        return r;
      }
    }
  return r;
}

std::vector<ExtElt> random_elements(const GroupContext& g, size_t count,
                                    int maxlen, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& om = g.omega_elements();
  std::uniform_int_distribution<size_t> pick_gen(0, g.delta_aff().size() - 1);
  std::uniform_int_distribution<size_t> pick_om(0, om.size() - 1);
  std::uniform_int_distribution<int> pick_len(0, maxlen + 4);
  std::vector<ExtElt> out;
  while (out.size() < count) {
    ExtElt x = om[pick_om(rng)];
    int steps = pick_len(rng);
    for (int i = 0; i < steps; ++i)
      x = g.mul(x, g.delta_aff()[pick_gen(rng)].elt);
    if (g.length(x) <= maxlen) out.push_back(x);
  }
  return out;
}

namespace {

struct Suite {
  const Algebra& a;
  const GroupContext& g;
  int window;
  uint64_t seed;
  std::vector<CheckResult> out;

  std::vector<ExtElt> win_bin;    // elements of length <= window
  std::vector<ExtElt> win_un;     // elements of length <= window + 2
  std::vector<LamElt> lam_bin;    // translations with l(t) <= window
  std::vector<LamElt> lam_small;  // translations with l(t) <= min(window, 4)

  Suite(const Algebra& alg, int w, uint64_t s)
      : a(alg), g(alg.group()), window(w), seed(s) {
    win_bin = g.window(window);
    win_un = g.window(window + 2);
    for (auto& x : win_un) {
      if (x.w != g.weyl().identity()) continue;
      int l = g.length(x);
      if (l <= window) lam_bin.push_back(x.lam);
      if (l <= std::min(window, 4)) lam_small.push_back(x.lam);
    }
  }

  std::string lit(const ExtElt& x) { return render_ext(g, x); }

  CheckResult& start(const std::string& name) {
    out.push_back(CheckResult{name, true, 0, "", ""});
    return out.back();
  }

  void im_quadratic() {
    auto& r = start("iwahori_matsumoto_quadratic");
    for (int i = 0; i < g.delta_size(); ++i) {
      ++r.checked;
      ExtElt s = g.delta_aff()[i].elt;
      LaurentInt q = LaurentInt::v_power(2 * static_cast<int>(a.params().weight[i]));
      HeckeElt expect;
      expect.add_term(s, q - LaurentInt(1));
      expect.add_term(g.one(), q);
      if (a.mul(a.basis(s), a.basis(s)) != expect) {
        r.pass = false;
        r.counterexample = "generator " + g.delta_aff()[i].name;
        return;
      }
    }
  }

  void im_additive() {
    auto& r = start("iwahori_matsumoto_braid_additive");
    r.detail = "window " + std::to_string(window);
    for (auto& u : win_bin)
      for (auto& w : win_bin) {
        ExtElt uw = g.mul(u, w);
        if (g.length(uw) != g.length(u) + g.length(w)) continue;
        ++r.checked;
        if (a.mul(a.basis(u), a.basis(w)) != a.basis(uw)) {
          r.pass = false;
          r.counterexample =
              "T[" + lit(u) + "] * T[" + lit(w) + "] != T[" + lit(uw) + "]";
          return;
        }
      }
  }

  void im_omega() {
    auto& r = start("iwahori_matsumoto_omega_twist");
    for (auto& w : win_bin)
      for (auto& tau : g.omega_elements()) {
        ++r.checked;
        HeckeElt lhs = a.mul(a.basis(w), a.basis(tau));
        bool ok = lhs == a.basis(g.mul(w, tau)) &&
                  lhs == a.mul(a.basis(tau), a.basis(g.conj(g.inv(tau), w)));
        if (!ok) {
          r.pass = false;
          r.counterexample = "w=" + lit(w) + " tau=" + lit(tau);
          return;
        }
      }
  }

  void length_gallery(size_t nrandom, int randlen) {
    auto& r = start("length_gallery_crosscheck");
    for (auto& w : win_un) {
      ++r.checked;
      if (static_cast<int>(g.gallery(w).word.size()) != g.length(w)) {
        r.pass = false;
        r.counterexample = lit(w);
        return;
      }
    }
    for (auto& w : random_elements(g, nrandom, randlen, seed)) {
      ++r.checked;
      if (static_cast<int>(g.gallery(w).word.size()) != g.length(w)) {
        r.pass = false;
        r.counterexample = lit(w);
        return;
      }
    }
    r.detail = "incl. " + std::to_string(nrandom) + " seeded random elements, l<=" +
               std::to_string(randlen);
  }

  void omega_projection() {
    auto& r = start("omega_projection_properties");
    auto win = g.window(std::min(window, 3));
    for (size_t i = 0; i < win.size(); ++i)
      for (size_t j = 0; j < win.size(); j += 2) {
        ++r.checked;
        ExtElt p = g.omega_projection(g.mul(win[i], win[j]));
        if (p != g.mul(g.omega_projection(win[i]), g.omega_projection(win[j])) ||
            g.omega_projection(g.conj(win[j], win[i])) !=
                g.omega_projection(win[i])) {
          r.pass = false;
          r.counterexample = lit(win[i]) + ", " + lit(win[j]);
          return;
        }
      }
  }

  void dominance_facts() {
    auto& r = start("dominance_facts");
    for (auto& l : lam_bin) {
      ++r.checked;
      bool any = false;
      for (auto& m : g.weyl_orbit(l)) {
        any = any || g.is_dominant(m);
        if (g.length(g.translation(m)) != g.length(g.translation(l))) {
          r.pass = false;
          r.counterexample = "orbit length not constant at " +
                             render_lattice(g, l);
          return;
        }
      }
      if (!any) {
        r.pass = false;
        r.counterexample = "no dominant element in the orbit of " +
                           render_lattice(g, l);
        return;
      }
      if (g.is_dominant(l)) {
        for (size_t w = 0; w < g.weyl().size(); ++w) {
          ExtElt wl = g.mul(g.finite(static_cast<int>(w)), g.translation(l));
          if (g.length(wl) != g.weyl().length(static_cast<int>(w)) +
                                  g.length(g.translation(l))) {
            r.pass = false;
            r.counterexample = "w t_l additivity at " + render_lattice(g, l);
            return;
          }
        }
      }
      for (auto& m : lam_small) {
        if (!g.is_dominant(l) || !g.is_dominant(m)) continue;
        if (g.length(g.mul(g.translation(l), g.translation(m))) !=
            g.length(g.translation(l)) + g.length(g.translation(m))) {
          r.pass = false;
          r.counterexample = "dominant additivity at " + render_lattice(g, l) +
                             ", " + render_lattice(g, m);
          return;
        }
      }
    }
  }

  void bruhat_subword() {
    auto& r = start("bruhat_subword_oracle");
    int wl = std::min(window, 5);
    r.detail = "window " + std::to_string(wl);
    auto win = g.window(wl);
    for (auto& y : win) {
      // oracle: all products of subwords of a reduced word of the affine part
      Gallery gy = g.gallery(y);
      auto word = g.gallery(g.mul(y, g.inv(gy.omega))).word;
      std::set<ExtElt> reach{g.one()};
      for (int letter : word) {
        std::set<ExtElt> next = reach;
        for (auto& e : reach) next.insert(g.mul(e, g.delta_aff()[letter].elt));
        reach = std::move(next);
      }
      for (auto& x : win) {
        ++r.checked;
        Gallery gx = g.gallery(x);
        bool oracle =
            gx.omega == gy.omega && reach.count(g.mul(x, g.inv(gx.omega))) > 0;
        if (g.bruhat_leq(x, y) != oracle) {
          r.pass = false;
          r.counterexample = lit(x) + " vs " + lit(y);
          return;
        }
      }
    }
  }

  // small dominant elements used to shift decompositions
  std::vector<LamElt> dominant_shifts() {
    std::set<LamElt> seeds;
    auto gens = g.lattice().generators();
    for (auto& x : gens) seeds.insert(x);
    for (auto& x : gens)
      for (auto& y : gens) seeds.insert(g.lattice().add(x, y));
    for (size_t j = 0; j < g.roots().num_simple(); ++j)
      seeds.insert(g.lattice().coroot(g.roots().simple[j]));
    std::set<LamElt> cset;
    for (auto& s : seeds)
      for (auto& m : g.weyl_orbit(s))
        if (g.is_dominant(m) && !m.is_zero()) {
          cset.insert(m);
          break;
        }
    std::vector<LamElt> cands(cset.begin(), cset.end());
    std::sort(cands.begin(), cands.end(), [&](const LamElt& x, const LamElt& y) {
      int lx = g.length(g.translation(x)), ly = g.length(g.translation(y));
      if (lx != ly) return lx < ly;
      return x < y;
    });
    if (cands.size() > 2) cands.resize(2);
    return cands;
  }

  void theta_well_defined() {
    auto& r = start("theta_well_defined");
    auto shifts = dominant_shifts();
    for (auto& l : lam_bin) {
      ++r.checked;
      auto [l1, l2] = g.small_decompose(l);
      HeckeElt base = a.theta_via(l1, l2);
      int used = 1;
      for (auto& shift : shifts) {
        ++used;
        if (a.theta_via(g.lattice().add(l1, shift), g.lattice().add(l2, shift)) !=
            base) {
          r.pass = false;
          r.counterexample = "theta decompositions disagree at " +
                             render_lattice(g, l);
          return;
        }
      }
      if (used < 3) {
        // no small shifts available: fall back to one 2rho^vee shift
        LamElt rho2{g.roots().two_rho_coroot(),
                    IntVec(g.lattice().torsion_orders().size(), 0)};
        if (a.theta_via(g.lattice().add(l1, rho2), g.lattice().add(l2, rho2)) !=
            base) {
          r.pass = false;
          r.counterexample = "theta decompositions disagree at " +
                             render_lattice(g, l);
          return;
        }
      }
    }
    r.detail = "3 decompositions per element";
  }

  void theta_support() {
    auto& r = start("theta_support");
    for (auto& l : lam_bin) {
      ++r.checked;
      ExtElt tl = g.translation(l);
      for (auto& [w, c] : a.theta(l).terms) {
        (void)c;
        if (!g.bruhat_leq(w, tl) ||
            g.omega_projection(w) != g.omega_projection(tl)) {
          r.pass = false;
          r.counterexample = "support " + lit(w) + " of theta at " +
                             render_lattice(g, l);
          return;
        }
      }
    }
  }

  void theta_additivity() {
    auto& r = start("theta_additivity");
    r.detail = "window " + std::to_string(std::min(window, 4));
    for (auto& l : lam_small)
      for (auto& m : lam_small) {
        ++r.checked;
        if (a.mul(a.theta(l), a.theta(m)) != a.theta(g.lattice().add(l, m))) {
          r.pass = false;
          r.counterexample = render_lattice(g, l) + " + " + render_lattice(g, m);
          return;
        }
      }
  }

  void commutation() {
    auto& r = start("commutation_relation");
    long long negative_n = 0, alternating = 0;
    for (auto& l : lam_bin)
      for (size_t s = 0; s < g.roots().num_simple(); ++s) {
        ++r.checked;
        Int n = dot(g.roots().roots[g.roots().simple[s]], l.free);
        if (n < 0) ++negative_n;
        int alpha = g.roots().simple[s];
        if (n >= 2 || n <= -2) {
          Int l0 = a.params().weight[s];
          Int l1 = g.wall_parameter(g.canonical_wall(alpha, 1), a.params());
          if (l0 != l1) ++alternating;
        }
        if (!a.commutation_check(static_cast<int>(s), l)) {
          r.pass = false;
          r.counterexample = "s=" + g.delta_aff()[s].name + " lambda=" +
                             render_lattice(g, l);
          return;
        }
      }
    r.detail = "signed-sum convention exercised " + std::to_string(negative_n) +
               " times; alternating-parameter instances: " +
               std::to_string(alternating);
  }

  void bernstein_roundtrip() {
    auto& r = start("bernstein_basis_roundtrip");
    int wl = std::min(window, 5);
    r.detail = "window " + std::to_string(wl);
    for (auto& x : g.window(wl)) {
      ++r.checked;
      if (a.from_bernstein(a.to_bernstein(a.basis(x))) != a.basis(x)) {
        r.pass = false;
        r.counterexample = lit(x);
        return;
      }
    }
  }

  // orbit sums for all orbits meeting the window, deduplicated
  std::vector<std::vector<LamElt>> window_orbits(int maxlen) {
    std::set<LamElt> seen;
    std::vector<std::vector<LamElt>> orbits;
    for (auto& x : g.window(maxlen)) {
      if (x.w != g.weyl().identity()) continue;
      if (g.length(x) > maxlen) continue;
      if (seen.count(x.lam)) continue;
      auto orb = g.weyl_orbit(x.lam);
      for (auto& m : orb) seen.insert(m);
      orbits.push_back(std::move(orb));
    }
    return orbits;
  }

  void center_commutes() {
    auto& r = start("center_orbit_sums_commute");
    int wl = window + 2;
    r.detail = "orbit length <= " + std::to_string(wl);
    for (auto& orb : window_orbits(wl)) {
      ++r.checked;
      HeckeElt z = a.central_element(orb);
      for (auto& [name, gen] : a.centrality_generators()) {
        if (a.mul(z, a.basis(gen)) != a.mul(a.basis(gen), z)) {
          r.pass = false;
          r.counterexample = "z at " + render_lattice(g, orb.front()) +
                             " vs generator " + name;
          return;
        }
      }
    }
  }

  void center_decomposition() {
    auto& r = start("center_decompose_roundtrip");
    auto orbits = window_orbits(window);
    std::mt19937_64 rng(seed ^ 0x5eed);
    std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2);
    int rounds = 8;
    for (int t = 0; t < rounds && !orbits.empty(); ++t) {
      ++r.checked;
      std::map<LamElt, LaurentInt> want;
      HeckeElt h;
      std::uniform_int_distribution<size_t> pick(0, orbits.size() - 1);
      for (int j = 0; j < 4; ++j) {
        auto& orb = orbits[pick(rng)];
        LaurentInt c = LaurentInt::monomial(coef(rng), expo(rng));
        if (c.is_zero()) continue;
        h += a.central_element(orb).scaled(c);
        auto it = want.find(orb.front());
        if (it == want.end()) {
          want.emplace(orb.front(), c);
        } else {
          it->second += c;
          if (it->second.is_zero()) want.erase(it);
        }
      }
      auto dec = a.center_decompose(h);
      if (!dec.central || dec.coeffs != want) {
        r.pass = false;
        r.counterexample = "random combination round " + std::to_string(t);
        return;
      }
    }
    // a generator is rejected with a witness
    ++r.checked;
    auto bad = a.center_decompose(a.basis(g.delta_aff()[0].elt));
    bool has_noncommuting = false;
    for (auto& [name, gen] : a.centrality_generators()) {
      (void)name;
      ExtElt s = g.delta_aff()[0].elt;
      if (g.mul(s, gen) != g.mul(gen, s)) has_noncommuting = true;
    }
    if (has_noncommuting && (bad.central || bad.witness_generator.empty())) {
      r.pass = false;
      r.counterexample = "T[" + lit(g.delta_aff()[0].elt) +
                         "] accepted as central";
    }
  }

  void iota_checks(size_t nproducts) {
    auto& r = start("iota_homomorphism");
    auto q = a.torsion_free_quotient();
    auto elems = random_elements(g, 2 * nproducts, std::min(window, 4), seed ^ 0x10);
    for (size_t i = 0; i + 1 < elems.size(); i += 2) {
      ++r.checked;
      HeckeElt p = a.mul(a.basis(elems[i]), a.basis(elems[i + 1]));
      HeckeElt lhs = a.quotient_map(p, *q);
      HeckeElt rhs = q->mul(a.quotient_map(a.basis(elems[i]), *q),
                            a.quotient_map(a.basis(elems[i + 1]), *q));
      if (lhs != rhs) {
        r.pass = false;
        r.counterexample = lit(elems[i]) + " * " + lit(elems[i + 1]);
        return;
      }
    }
    for (auto& l : lam_small) {
      ++r.checked;
      if (a.quotient_map(a.theta(l), *q) != q->theta({l.free, {}})) {
        r.pass = false;
        r.counterexample = "theta image at " + render_lattice(g, l);
        return;
      }
    }
    for (auto& orb : window_orbits(std::min(window, 4))) {
      ++r.checked;
      HeckeElt zq = a.quotient_map(a.central_element(orb), *q);
      auto dq = q->center_decompose(zq);
      if (!dq.central) {
        r.pass = false;
        r.counterexample = "image of orbit sum at " +
                           render_lattice(g, orb.front()) + " not central";
        return;
      }
    }
    r.detail = std::to_string(nproducts) + " seeded products";
  }

  void conjugation_chains() {
    auto& r = start("conjugation_length_chain");
    int wl = std::min(window, 4);
    r.detail = "length <= " + std::to_string(wl) + ", cap 10";
    for (auto& w : g.window(wl)) {
      if (w.w == g.weyl().identity()) continue;
      ++r.checked;
      auto chain = g.length_increasing_conjugation(w, 10);
      if (!chain) {
        r.pass = false;
        r.counterexample = lit(w);
        return;
      }
      ExtElt x = w;
      int l0 = g.length(w);
      bool ok = true;
      for (int gi : chain->plateau) {
        x = g.conj(g.delta_aff()[gi].elt, x);
        ok = ok && g.length(x) == l0;
      }
      x = g.conj(g.delta_aff()[chain->final_gen].elt, x);
      ok = ok && g.length(x) > l0;
      if (!ok) {
        r.pass = false;
        r.counterexample = "invalid chain for " + lit(w);
        return;
      }
    }
  }

  void hyperplane_families() {
    auto& r = start("hyperplane_families");
    std::set<int> seen;
    std::ostringstream d;
    for (size_t root = 0; root < g.roots().size(); ++root) {
      if (!g.roots().positive[root] || seen.count(static_cast<int>(root)))
        continue;
      // one representative per Weyl orbit of roots
      for (size_t w = 0; w < g.weyl().size(); ++w) {
        int img = g.weyl().apply(static_cast<int>(w), static_cast<int>(root));
        seen.insert(img);
        seen.insert(g.roots().negation[img]);
      }
      ++r.checked;
      bool trans = g.family_transitive(static_cast<int>(root));
      Int p0 = g.wall_parameter(g.canonical_wall(static_cast<int>(root), 0),
                                a.params());
      Int p1 = g.wall_parameter(g.canonical_wall(static_cast<int>(root), 1),
                                a.params());
      d << "family(" << render_intvec_str(g.roots().roots[root])
        << "): transitive=" << (trans ? "true" : "false") << ", L(H0)=" << p0
        << ", L(H1)=" << p1 << "; ";
      if (trans && p0 != p1) {
        r.pass = false;
        r.counterexample = "transitive family with unequal wall parameters: " +
                           render_intvec_str(g.roots().roots[root]);
        return;
      }
    }
    r.detail = d.str();
  }

  static std::string render_intvec_str(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  }

  void params_valid() {
    auto& r = start("params_valid");
    r.checked = 1;
    auto viol = g.validate_params(a.params());
    if (!viol.empty()) {
      r.pass = false;
      r.counterexample = viol.front().gen_a + "/" + viol.front().gen_b + ": " +
                         viol.front().reason;
    }
  }

  void oracle() {
    out.push_back(group_algebra_oracle(a, std::min(window, 4)));
  }
};

}  // namespace

VerificationReport run_paper_suite(const Algebra& a, const std::string& fixture,
                                   int window, uint64_t seed) {
  Suite s(a, window, seed);
  s.params_valid();
  s.im_quadratic();
  s.im_additive();
  s.im_omega();
  s.length_gallery(200, window + 6);
  s.omega_projection();
  s.dominance_facts();
  s.bruhat_subword();
  s.theta_well_defined();
  s.theta_support();
  s.theta_additivity();
  s.commutation();
  s.bernstein_roundtrip();
  s.center_commutes();
  s.center_decomposition();
  s.iota_checks(50);
  s.conjugation_chains();
  s.hyperplane_families();
  s.oracle();

  VerificationReport rep;
  rep.fixture = fixture;
  rep.window = window;
  rep.seed = seed;
  rep.checks = std::move(s.out);
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& x, const CheckResult& y) { return x.name < y.name; });
  return rep;
}

}  // namespace hecke

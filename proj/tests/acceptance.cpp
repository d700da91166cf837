// Acceptance suite: runs every structural identity the library promises, at
// its pinned window, over every shipped configuration.  Exact equality
// throughout; no tolerances.  Prints one line per criterion.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "hecke/config.hpp"
#include "hecke/format.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

struct Criterion {
  int number;
  std::string text;
  bool pass = true;
  std::string failure;
  long long checked = 0;
};

std::vector<std::string> kFixtures = {
    "a1_root_lattice", "a1_weight_lattice", "a1_torsion", "a2_omega3",
    "c2_alternating",  "su6_ramified",      "so_ramified"};

std::map<std::string, std::shared_ptr<Algebra>> g_algebras;

std::shared_ptr<Algebra> alg(const std::string& name) {
  auto it = g_algebras.find(name);
  if (it != g_algebras.end()) return it->second;
  auto a = build_algebra(
      load_config(std::string(HECKE_FIXTURE_DIR) + "/" + name + ".json"));
  g_algebras.emplace(name, a);
  return a;
}

void fail(Criterion& c, const std::string& fixture, const std::string& what) {
  if (!c.pass) return;
  c.pass = false;
  c.failure = fixture + ": " + what;
}

std::vector<LamElt> translations_upto(const GroupContext& g, int maxlen) {
  std::vector<LamElt> out;
  for (auto& w : g.window(maxlen))
    if (w.w == g.weyl().identity() && g.length(w) <= maxlen) out.push_back(w.lam);
  return out;
}

std::vector<std::vector<LamElt>> orbits_upto(const GroupContext& g, int maxlen) {
  std::vector<std::vector<LamElt>> orbits;
  std::set<LamElt> seen;
  for (auto& w : g.window(maxlen)) {
    if (w.w != g.weyl().identity() || seen.count(w.lam)) continue;
    if (g.length(w) > maxlen) continue;
    auto orb = g.weyl_orbit(w.lam);
    for (auto& m : orb) seen.insert(m);
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<LamElt> small_dominant_shifts(const GroupContext& g) {
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

// 1. Iwahori-Matsumoto relations at window 6, exact.
Criterion criterion1() {
  Criterion c{1,
              "Iwahori-Matsumoto relations (quadratic, length-additive, "
              "stabilizer twist), window 6, exact"};
  for (auto& f : kFixtures) {
    auto A = alg(f);
    auto& g = A->group();
    for (int i = 0; i < g.delta_size(); ++i) {
      ++c.checked;
      ExtElt s = g.delta_aff()[i].elt;
      LaurentInt q = LaurentInt::v_power(2 * static_cast<int>(A->params().weight[i]));
      HeckeElt expect;
      expect.add_term(s, q - LaurentInt(1));
      expect.add_term(g.one(), q);
      if (A->mul(A->basis(s), A->basis(s)) != expect)
        fail(c, f, "quadratic relation at " + g.delta_aff()[i].name);
    }
    auto win = g.window(6);
    for (auto& u : win)
      for (auto& w : win) {
        ExtElt uw = g.mul(u, w);
        if (g.length(uw) != g.length(u) + g.length(w)) continue;
        ++c.checked;
        if (A->mul(A->basis(u), A->basis(w)) != A->basis(uw)) {
          fail(c, f,
               "additive product at " + render_ext(g, u) + ", " + render_ext(g, w));
          return c;
        }
      }
    for (auto& w : win)
      for (auto& tau : g.omega_elements()) {
        ++c.checked;
        HeckeElt lhs = A->mul(A->basis(w), A->basis(tau));
        if (lhs != A->basis(g.mul(w, tau)) ||
            lhs != A->mul(A->basis(tau), A->basis(g.conj(g.inv(tau), w)))) {
          fail(c, f, "stabilizer twist at " + render_ext(g, w));
          return c;
        }
      }
  }
  return c;
}

// 2. v = 1 group-ring oracle at window 4.
Criterion criterion2() {
  Criterion c{2, "group-ring oracle: v=1 specialization vs direct group "
                 "product, window 4, exact"};
  for (auto& f : kFixtures) {
    auto A = alg(f);
    CheckResult r = group_algebra_oracle(*A, 4);
    c.checked += r.checked;
    if (!r.pass) fail(c, f, r.counterexample);
  }
  return c;
}

// 3. closed-form length == gallery length; window 6 plus 1000 random l<=12.
Criterion criterion3() {
  Criterion c{3, "length cross-check: closed formula vs gallery walk, window 6 "
                 "+ 1000 seeded random elements of length <= 12, exact"};
  for (auto& f : kFixtures) {
    auto A = alg(f);
    auto& g = A->group();
    for (auto& w : g.window(6)) {
      ++c.checked;
      if (static_cast<int>(g.gallery(w).word.size()) != g.length(w)) {
        fail(c, f, render_ext(g, w));
        return c;
      }
    }
    for (auto& w : random_elements(g, 1000, 12, 0xC3)) {
      ++c.checked;
      if (static_cast<int>(g.gallery(w).word.size()) != g.length(w)) {
        fail(c, f, render_ext(g, w));
        return c;
      }
    }
  }
  return c;
}

// 4. theta well-definedness (3 decompositions) and additivity (window 4).
Criterion criterion4() {
  Criterion c{4, "theta: 3 dominant decompositions agree bit-exactly; "
                 "additivity exhaustive for translation lengths <= 4, exact"};
  for (auto& f : kFixtures) {
    auto A = alg(f);
    auto& g = A->group();
    auto shifts = small_dominant_shifts(g);
    for (auto& l : translations_upto(g, 6)) {
      ++c.checked;
      auto [l1, l2] = g.small_decompose(l);
      HeckeElt base = A->theta_via(l1, l2);
      int used = 1;
      for (auto& mu : shifts) {
        ++used;
        if (A->theta_via(g.lattice().add(l1, mu), g.lattice().add(l2, mu)) !=
            base) {
          fail(c, f, "decompositions disagree at " + render_lattice(g, l));
          return c;
        }
      }
      if (used < 3) {
        LamElt rho2{g.roots().two_rho_coroot(),
                    IntVec(g.lattice().torsion_orders().size(), 0)};
        if (A->theta_via(g.lattice().add(l1, rho2), g.lattice().add(l2, rho2)) !=
            base) {
          fail(c, f, "decompositions disagree at " + render_lattice(g, l));
          return c;
        }
      }
      if (base != A->theta(l)) {
        fail(c, f, "theta cache mismatch at " + render_lattice(g, l));
        return c;
      }
    }
    auto lams = translations_upto(g, 4);
    for (auto& l : lams)
      for (auto& m : lams) {
        ++c.checked;
        if (A->mul(A->theta(l), A->theta(m)) != A->theta(g.lattice().add(l, m))) {
          fail(c, f, "additivity fails at " + render_lattice(g, l) + " + " +
                         render_lattice(g, m));
          return c;
        }
      }
  }
  return c;
}

// 5. commutation relation; the alternating fixture shows two distinct values.
Criterion criterion5() {
  Criterion c{5, "commutation relation for every finite simple reflection and "
                 "translation length <= 6; distinct coefficients appear in "
                 "c2_alternating, exact"};
  for (auto& f : kFixtures) {
    auto A = alg(f);
    auto& g = A->group();
    for (auto& l : translations_upto(g, 6))
      for (size_t s = 0; s < g.roots().num_simple(); ++s) {
        ++c.checked;
        if (!A->commutation_check(static_cast<int>(s), l)) {
          fail(c, f, "s=" + g.delta_aff()[s].name + " lambda=" +
                         render_lattice(g, l));
          return c;
        }
      }
  }
  {
    auto A = alg("c2_alternating");
    auto& g = A->group();
    bool found = false;
    for (auto& l : translations_upto(g, 6))
      for (size_t s = 0; s < g.roots().num_simple() && !found; ++s) {
        int alpha = g.roots().simple[s];
        Int n = dot(g.roots().roots[alpha], l.free);
        if (n < 2 && n > -2) continue;
        Int l0 = A->params().weight[s];
        Int l1 = g.wall_parameter(g.canonical_wall(alpha, 1), A->params());
        if (l0 == l1) continue;
        // both coefficient values appear in the right-hand side
        LaurentInt g0 = LaurentInt::v_power(static_cast<int>(2 * l0)) - LaurentInt(1);
        LaurentInt g1 = LaurentInt::v_power(static_cast<int>(l0 + l1)) -
                        LaurentInt::v_power(static_cast<int>(l0 - l1));
        BernsteinForm rhs = A->to_bernstein(A->commutation_rhs(static_cast<int>(s), l));
        bool has0 = false, has1 = false;
        for (auto& [k, coeff] : rhs) {
          (void)k;
          if (coeff == g0 || coeff == -g0) has0 = true;
          if (coeff == g1 || coeff == -g1) has1 = true;
        }
        if (has0 && has1 && g0 != g1) found = true;
      }
    ++c.checked;
    if (!found)
      fail(c, "c2_alternating",
           "no commutation instance exhibits two distinct coefficients");
  }
  return c;
}

// 6. Bernstein basis round trip at window 5.
Criterion criterion6() {
  Criterion c{6, "Bernstein basis: to/from round trip on all T_x with length "
                 "<= 5, exact"};
  for (auto& f : kFixtures) {
    auto A = alg(f);
    auto& g = A->group();
    for (auto& x : g.window(5)) {
      ++c.checked;
      if (A->from_bernstein(A->to_bernstein(A->basis(x))) != A->basis(x)) {
        fail(c, f, render_ext(g, x));
        return c;
      }
    }
  }
  return c;
}

// 7. center: orbit sums commute (orbit length <= 8), random combinations
// decompose exactly, generators are rejected with a witness.
Criterion criterion7() {
  Criterion c{7, "center: orbit sums with orbit length <= 8 commute with all "
                 "generators; decomposition recovers random <=4-orbit "
                 "combinations and rejects T_s with a witness, exact"};
  for (auto& f : kFixtures) {
    auto A = alg(f);
    auto& g = A->group();
    auto orbits = orbits_upto(g, 8);
    for (auto& orb : orbits) {
      ++c.checked;
      HeckeElt z = A->central_element(orb);
      for (auto& [name, gen] : A->centrality_generators())
        if (A->mul(z, A->basis(gen)) != A->mul(A->basis(gen), z)) {
          fail(c, f, "orbit sum at " + render_lattice(g, orb.front()) +
                         " vs " + name);
          return c;
        }
    }
    std::mt19937_64 rng(0xC7);
    std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2);
    for (int round = 0; round < 5 && !orbits.empty(); ++round) {
      ++c.checked;
      std::uniform_int_distribution<size_t> pick(0, orbits.size() - 1);
      HeckeElt h;
      std::map<LamElt, LaurentInt> want;
      for (int j = 0; j < 4; ++j) {
        auto& orb = orbits[pick(rng)];
        LaurentInt cc = LaurentInt::monomial(coef(rng), expo(rng));
        if (cc.is_zero()) continue;
        h += A->central_element(orb).scaled(cc);
        auto it = want.find(orb.front());
        if (it == want.end()) {
          want.emplace(orb.front(), cc);
        } else {
          it->second += cc;
          if (it->second.is_zero()) want.erase(it);
        }
      }
      auto dec = A->center_decompose(h);
      if (!dec.central || dec.coeffs != want) {
        fail(c, f, "random combination round " + std::to_string(round));
        return c;
      }
    }
    ++c.checked;
    ExtElt s = g.delta_aff()[0].elt;
    bool noncommuting = false;
    for (auto& [name, gen] : A->centrality_generators()) {
      (void)name;
      if (g.mul(s, gen) != g.mul(gen, s)) noncommuting = true;
    }
    auto bad = A->center_decompose(A->basis(s));
    if (noncommuting &&
        (bad.central || bad.witness_generator.empty() ||
         bad.witness_commutator.is_zero()))
      fail(c, f, "generator accepted as central");
  }
  return c;
}

// 8. torsion quotient map on a1_torsion: 200 seeded products, theta images,
// central images.
Criterion criterion8() {
  Criterion c{8, "quotient map on a1_torsion: multiplicative on 200 seeded "
                 "products; theta and orbit sums map to their quotient "
                 "counterparts, exact"};
  auto A = alg("a1_torsion");
  auto Q = A->torsion_free_quotient();
  auto& g = A->group();
  auto elems = random_elements(g, 400, 4, 0xC8);
  for (size_t i = 0; i + 1 < elems.size(); i += 2) {
    ++c.checked;
    HeckeElt p = A->mul(A->basis(elems[i]), A->basis(elems[i + 1]));
    if (A->quotient_map(p, *Q) !=
        Q->mul(A->quotient_map(A->basis(elems[i]), *Q),
               A->quotient_map(A->basis(elems[i + 1]), *Q))) {
      fail(c, "a1_torsion", "product " + render_ext(g, elems[i]) + " * " +
                                render_ext(g, elems[i + 1]));
      return c;
    }
  }
  for (auto& l : translations_upto(g, 6)) {
    ++c.checked;
    if (A->quotient_map(A->theta(l), *Q) != Q->theta({l.free, {}})) {
      fail(c, "a1_torsion", "theta image at " + render_lattice(g, l));
      return c;
    }
  }
  for (auto& orb : orbits_upto(g, 6)) {
    ++c.checked;
    auto dq = Q->center_decompose(A->quotient_map(A->central_element(orb), *Q));
    if (!dq.central) {
      fail(c, "a1_torsion",
           "orbit sum image not central at " + render_lattice(g, orb.front()));
      return c;
    }
  }
  return c;
}

// 9. the transitivity dichotomy between the two rank-3 configurations.
Criterion criterion9() {
  Criterion c{9, "wall-family dichotomy: su6_ramified short family transitive "
                 "with equal parameters; so_ramified long family not "
                 "transitive, exact booleans"};
  {
    auto A = alg("su6_ramified");
    auto& g = A->group();
    int root = g.roots().index_of({1, 0, 0});
    ++c.checked;
    if (root < 0 || !g.family_transitive(root))
      fail(c, "su6_ramified", "short wall family is not transitive");
    else if (g.wall_parameter(g.canonical_wall(root, 0), A->params()) !=
             g.wall_parameter(g.canonical_wall(root, 1), A->params()))
      fail(c, "su6_ramified", "transitive family with unequal parameters");
  }
  {
    auto A = alg("so_ramified");
    auto& g = A->group();
    int root = g.roots().index_of({2, 0, 0});
    ++c.checked;
    if (root < 0 || g.family_transitive(root))
      fail(c, "so_ramified", "long wall family is unexpectedly transitive");
  }
  return c;
}

// 10. conjugation-length chains in the rank <= 2 fixtures.
Criterion criterion10() {
  Criterion c{10, "plateau-then-increase conjugation chain found for every "
                  "non-translation of length <= 4 (a1/a2 fixtures), cap 10"};
  for (auto f : {"a1_root_lattice", "a1_weight_lattice", "a1_torsion",
                 "a2_omega3"}) {
    auto A = alg(f);
    auto& g = A->group();
    for (auto& w : g.window(4)) {
      if (w.w == g.weyl().identity()) continue;
      ++c.checked;
      auto chain = g.length_increasing_conjugation(w, 10);
      if (!chain) {
        fail(c, f, "no chain for " + render_ext(g, w));
        return c;
      }
      ExtElt x = w;
      int l0 = g.length(w);
      bool ok = true;
      for (int gi : chain->plateau) {
        x = g.conj(g.delta_aff()[gi].elt, x);
        ok = ok && g.length(x) == l0;
      }
      x = g.conj(g.delta_aff()[chain->final_gen].elt, x);
      if (!ok || g.length(x) <= l0) {
        fail(c, f, "invalid chain for " + render_ext(g, w));
        return c;
      }
    }
  }
  return c;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Criterion> results;
  results.push_back(criterion1());
  results.push_back(criterion2());
  results.push_back(criterion3());
  results.push_back(criterion4());
  results.push_back(criterion5());
  results.push_back(criterion6());
  results.push_back(criterion7());
  results.push_back(criterion8());
  results.push_back(criterion9());
  results.push_back(criterion10());

  bool all = true;
  for (auto& c : results) {
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number
              << ": " << c.text << " (" << c.checked << " checks)";
    if (!c.pass) std::cout << "\n       " << c.failure;
    std::cout << "\n";
    all = all && c.pass;
  }
  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  std::cout << (all ? "ACCEPTANCE: all criteria passed"
                    : "ACCEPTANCE: FAILURES PRESENT")
            << " (" << dt.count() / 1000.0 << "s)\n";
  return all ? 0 : 1;
}

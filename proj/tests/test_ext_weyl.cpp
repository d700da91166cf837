#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "test_contexts.hpp"

using namespace hecke;

namespace {

ExtElt t(const GroupContext& g, IntVec free, IntVec tors = {}) {
  if (tors.empty()) tors.assign(g.lattice().torsion_orders().size(), 0);
  return g.translation({std::move(free), std::move(tors)});
}

// Subword-property oracle: enumerate subwords of one reduced word of b.
bool subword_oracle(const GroupContext& g, const ExtElt& a, const ExtElt& b) {
  auto ga = g.gallery(a), gb = g.gallery(b);
  if (ga.omega != gb.omega) return false;
  ExtElt aw = g.mul(a, g.inv(ga.omega));
  auto word = g.gallery(g.mul(b, g.inv(gb.omega))).word;
  size_t n = word.size();
  for (size_t mask = 0; mask < (1u << n); ++mask) {
    ExtElt acc = g.one();
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) acc = g.mul(acc, g.delta_aff()[word[i]].elt);
    if (acc == aw) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("semidirect product law") {
  auto g = testctx::a1_root();
  ExtElt ta = t(*g, {1}), tb = t(*g, {3});
  CHECK(g->mul(ta, tb) == t(*g, {4}));
  CHECK(g->mul(tb, ta) == g->mul(ta, tb));

  int s = g->weyl().simple_reflection(0);
  ExtElt fs = g->finite(s);
  // conjugation of a translation is the action
  CHECK(g->conj(fs, ta) == t(*g, {-1}));
  // (a^vee, s)^2 = identity
  ExtElt x{{{1}, {}}, s};
  CHECK(g->mul(x, x) == g->one());
}

TEST_CASE("associativity spot checks") {
  auto g = testctx::a2_omega3();
  auto win = g->window(3);
  for (size_t i = 0; i < win.size(); i += 7)
    for (size_t j = 1; j < win.size(); j += 11)
      for (size_t k = 2; k < win.size(); k += 13) {
        CHECK(g->mul(g->mul(win[i], win[j]), win[k]) ==
              g->mul(win[i], g->mul(win[j], win[k])));
      }
}

TEST_CASE("length closed formula, frozen values") {
  auto g = testctx::a1_weight();
  CHECK(g->length(g->one()) == 0);
  CHECK(g->length(t(*g, {2})) == 2);   // t_{a^vee}
  CHECK(g->length(t(*g, {1})) == 1);   // t_{omega}

  auto gt = testctx::a1_torsion();
  CHECK(gt->length(t(*gt, {0}, {1})) == 0);  // pure torsion
}

TEST_CASE("gallery on generators and torsion") {
  auto g = testctx::a1_torsion();
  for (int i = 0; i < g->delta_size(); ++i) {
    auto gal = g->gallery(g->delta_aff()[i].elt);
    CHECK(gal.word == std::vector<int>{i});
    CHECK(gal.omega == g->one());
  }
  ExtElt pure = t(*g, {0}, {1});
  auto gal = g->gallery(pure);
  CHECK(gal.word.empty());
  CHECK(gal.omega == pure);
}

TEST_CASE("gallery of a minuscule translation in A2") {
  auto g = testctx::a2_omega3();
  ExtElt w = t(*g, {1, 0});
  CHECK(g->length(w) == 2);
  auto gal = g->gallery(w);
  CHECK(gal.word.size() == 2);
  CHECK(gal.omega != g->one());
  // brute-force: no shorter factorization word*stabilizer exists
  for (int i = 0; i < g->delta_size(); ++i) {
    ExtElt rest = g->mul(g->inv(g->delta_aff()[i].elt), w);
    CHECK(g->length(rest) != 0);
  }
  CHECK(g->length(w) != 0);
  // the stabilizer part fixes the base alcove: its length is 0
  CHECK(g->length(gal.omega) == 0);
  // reassemble
  ExtElt acc = g->one();
  for (int i : gal.word) acc = g->mul(acc, g->delta_aff()[i].elt);
  CHECK(g->mul(acc, gal.omega) == w);
}

TEST_CASE("gallery length equals closed formula on windows") {
  for (auto make : {testctx::a1_root, testctx::a1_weight, testctx::a1_torsion,
                    testctx::a2_omega3, testctx::c2}) {
    auto g = make();
    for (auto& w : g->window(6))
      CHECK(static_cast<int>(g->gallery(w).word.size()) == g->length(w));
  }
}

TEST_CASE("omega projection is multiplicative and conjugation-invariant") {
  auto g = testctx::a1_torsion();
  auto win = g->window(3);
  for (size_t i = 0; i < win.size(); i += 3)
    for (size_t j = 0; j < win.size(); j += 5) {
      ExtElt pij = g->omega_projection(g->mul(win[i], win[j]));
      ExtElt pp = g->mul(g->omega_projection(win[i]), g->omega_projection(win[j]));
      CHECK(pij == pp);
      ExtElt c = g->conj(win[j], win[i]);
      CHECK(g->omega_projection(c) == g->omega_projection(win[i]));
    }
}

TEST_CASE("bruhat order basics and subword oracle") {
  auto g = testctx::a1_weight();
  ExtElt s = g->delta_aff()[0].elt;
  CHECK(g->bruhat_leq(s, s));
  // distinct stabilizer components never compare
  CHECK_FALSE(g->bruhat_leq(g->one(), t(*g, {1})));
  CHECK_FALSE(g->bruhat_leq(t(*g, {1}), g->one()));

  for (auto make : {testctx::a1_root, testctx::a2_omega3}) {
    auto gg = make();
    auto win = gg->window(5);
    for (auto& a : win)
      for (auto& b : win)
        CHECK(gg->bruhat_leq(a, b) == subword_oracle(*gg, a, b));
  }
}

TEST_CASE("bruhat order is a partial order") {
  auto g = testctx::a2_omega3();
  auto win = g->window(3);
  for (auto& a : win)
    for (auto& b : win) {
      if (g->bruhat_leq(a, b) && g->bruhat_leq(b, a)) CHECK(a == b);
      for (auto& c : win)
        if (g->bruhat_leq(a, b) && g->bruhat_leq(b, c))
          CHECK(g->bruhat_leq(a, c));
    }
}

TEST_CASE("dominance") {
  auto g = testctx::a1_root();
  CHECK(g->is_dominant(g->lattice().zero()));
  CHECK_FALSE(g->is_dominant({{-1}, {}}));

  auto gt = testctx::a1_torsion();
  CHECK(gt->is_dominant({{0}, {1}}));  // pure torsion is dominant

  // decomposition: dominant gives (l, 0)
  auto [d1, d2] = g->dominant_decompose({{3}, {}});
  CHECK(d1 == LamElt{{3}, {}});
  CHECK(d2 == g->lattice().zero());
  // frozen: -a^vee = (0) - (a^vee), via 2rho^vee = a^vee
  auto [m1, m2] = g->dominant_decompose({{-1}, {}});
  CHECK(m1 == g->lattice().zero());
  CHECK(m2 == LamElt{{1}, {}});
  // torsion element decomposes trivially
  auto [t1, t2] = gt->dominant_decompose({{0}, {1}});
  CHECK(t1 == LamElt{{0}, {1}});
  CHECK(t2 == gt->lattice().zero());
}

TEST_CASE("dominance facts on windows") {
  for (auto make : {testctx::a1_torsion, testctx::a2_omega3, testctx::c2}) {
    auto g = make();
    std::vector<LamElt> lams;
    for (auto& w : g->window(4))
      if (w.w == 0 && g->length(w) <= 4) lams.push_back(w.lam);
    for (auto& l : lams) {
      // fact (1): some Weyl image is dominant
      bool any = false;
      for (auto& m : g->weyl_orbit(l)) any = any || g->is_dominant(m);
      CHECK(any);
      // fact (5): orbit constancy of translation length
      for (auto& m : g->weyl_orbit(l))
        CHECK(g->length(g->translation(m)) == g->length(g->translation(l)));
      for (auto& m : lams) {
        if (!g->is_dominant(l) || !g->is_dominant(m)) continue;
        // fact (3)
        CHECK(g->length(g->mul(g->translation(l), g->translation(m))) ==
              g->length(g->translation(l)) + g->length(g->translation(m)));
      }
      if (g->is_dominant(l)) {
        // fact (4)
        for (size_t w = 0; w < g->weyl().size(); ++w) {
          ExtElt wl = g->mul(g->finite(static_cast<int>(w)), g->translation(l));
          CHECK(g->length(wl) ==
                g->weyl().length(static_cast<int>(w)) + g->length(g->translation(l)));
        }
      }
    }
  }
}

TEST_CASE("weyl orbits, frozen") {
  auto g = testctx::a1_root();
  auto o0 = g->weyl_orbit(g->lattice().zero());
  CHECK(o0.size() == 1);
  auto o1 = g->weyl_orbit({{1}, {}});
  CHECK(o1.size() == 2);
  CHECK(std::set<LamElt>(o1.begin(), o1.end()) ==
        std::set<LamElt>{{{1}, {}}, {{-1}, {}}});

  auto b3 = testctx::su6();
  auto oe = b3->weyl_orbit({{1, 0, 0}, {}});
  CHECK(oe.size() == 6);
  std::set<LamElt> expect;
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      IntVec v(3, 0);
      v[i] = s;
      expect.insert({v, {}});
    }
  CHECK(std::set<LamElt>(oe.begin(), oe.end()) == expect);
}

TEST_CASE("wall types and parameters") {
  auto g = testctx::c2();
  ParamSys p{{1, 1, 2}};  // s1, s2, s0
  CHECK(g->validate_params(p).empty());
  // base-alcove walls give back their own labels
  for (int i = 0; i < g->delta_size(); ++i) {
    auto& gen = g->delta_aff()[i];
    CHECK(g->wall_parameter({gen.root_idx, gen.level}, p) == p.weight[i]);
  }
  // the long family splits: levels 0 and 1 carry different weights
  int long_root = g->roots().index_of({2, 0});
  CHECK(g->wall_parameter(g->canonical_wall(long_root, 0), p) == 1);
  CHECK(g->wall_parameter(g->canonical_wall(long_root, 1), p) == 2);
  // the short family does not split
  int short_root = g->roots().index_of({1, -1});
  CHECK(g->wall_parameter(g->canonical_wall(short_root, 0), p) ==
        g->wall_parameter(g->canonical_wall(short_root, 1), p));
}

TEST_CASE("su6-style fixture: transitive family with equal parameters") {
  auto g = testctx::su6();
  ParamSys p{{1, 1, 2, 1}};  // s1 s2 s3 s0; only the short node is free
  CHECK(g->validate_params(p).empty());
  int short_root = g->roots().index_of({1, 0, 0});
  CHECK(g->family_transitive(short_root));
  CHECK(g->wall_parameter(g->canonical_wall(short_root, 0), p) ==
        g->wall_parameter(g->canonical_wall(short_root, 1), p));
}

TEST_CASE("so-style fixture: non-transitive long family") {
  auto g = testctx::so();
  int long_root = g->roots().index_of({2, 0, 0});
  CHECK_FALSE(g->family_transitive(long_root));
  int short_root = g->roots().index_of({1, -1, 0});
  CHECK(g->family_transitive(short_root));
}

TEST_CASE("rank-1 transitivity depends on the lattice") {
  auto r = testctx::a1_root();
  CHECK_FALSE(r->family_transitive(r->roots().index_of({2})));
  auto w = testctx::a1_weight();
  CHECK(w->family_transitive(w->roots().index_of({1})));
  // an absurdly small exploration bound is reported, never guessed
  CHECK_THROWS_AS(w->family_transitive(w->roots().index_of({1}), 1),
                  DomainError);
}

TEST_CASE("parameter validation catches odd edges and stabilizer orbits") {
  auto g = testctx::a2_omega3();
  CHECK(g->validate_params(ParamSys{{1, 1, 1}}).empty());
  auto viol = g->validate_params(ParamSys{{1, 2, 1}});
  CHECK_FALSE(viol.empty());
  bool odd_edge = false;
  for (auto& v : viol)
    if (v.reason.find("odd") != std::string::npos) odd_edge = true;
  CHECK(odd_edge);

  auto s = testctx::su6();
  CHECK(s->validate_params(ParamSys{{1, 1, 2, 1}}).empty());
  CHECK_FALSE(s->validate_params(ParamSys{{2, 1, 1, 1}}).empty());

  // a1 weight lattice: no odd edge (infinite bond), but the alcove rotation
  // swaps the two generators, so unequal weights are rejected...
  auto w = testctx::a1_weight();
  auto sviol = w->validate_params(ParamSys{{1, 2}});
  CHECK_FALSE(sviol.empty());
  bool stab = false;
  for (auto& v : sviol)
    if (v.reason.find("stabilizer") != std::string::npos) stab = true;
  CHECK(stab);
  CHECK(w->validate_params(ParamSys{{1, 1}}).empty());
  // ...while on the root lattice the stabilizer is trivial and they are fine
  auto r = testctx::a1_root();
  CHECK(r->validate_params(ParamSys{{1, 2}}).empty());
}

TEST_CASE("length-increasing conjugation chains") {
  auto g = testctx::a2_omega3();
  // a single finite generator has an immediate non-commuting partner
  auto chain = g->length_increasing_conjugation(g->delta_aff()[0].elt, 10);
  REQUIRE(chain.has_value());
  CHECK(chain->plateau.empty());

  CHECK_THROWS_AS(g->length_increasing_conjugation(t(*g, {1, 1}), 10),
                  DomainError);

  // every non-translation element of length <= 4 yields a chain
  for (auto& w : g->window(4)) {
    if (w.w == g->weyl().identity()) continue;
    auto c = g->length_increasing_conjugation(w, 10);
    REQUIRE(c.has_value());
    // replay the chain and verify the certified lengths
    ExtElt x = w;
    int l0 = g->length(w);
    for (int gi : c->plateau) {
      x = g->mul(g->delta_aff()[gi].elt, g->mul(x, g->delta_aff()[gi].elt));
      CHECK(g->length(x) == l0);
    }
    x = g->mul(g->delta_aff()[c->final_gen].elt,
               g->mul(x, g->delta_aff()[c->final_gen].elt));
    CHECK(g->length(x) > l0);
  }
}

TEST_CASE("omega enumeration matches the lattice/coroot index") {
  CHECK(testctx::a1_root()->omega_elements().size() == 1);
  CHECK(testctx::a1_weight()->omega_elements().size() == 2);
  CHECK(testctx::a1_torsion()->omega_elements().size() == 4);
  CHECK(testctx::a2_omega3()->omega_elements().size() == 3);
  CHECK(testctx::c2()->omega_elements().size() == 1);
  CHECK(testctx::su6()->omega_elements().size() == 2);
  CHECK(testctx::so()->omega_elements().size() == 2);
}

#include "hecke/root_system.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

std::string BuildError::what() const {
  std::ostringstream out;
  out << "validation failed (" << problems.size() << " problem(s)):";
  for (auto& p : problems) out << "\n  - " << p;
  return out.str();
}

size_t int_rank(std::vector<IntVec> rows) {
  size_t rank = 0;
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Int a = rows[r][c], b = rows[i][c];
      for (size_t k = 0; k < ncols; ++k) rows[i][k] = rows[i][k] * a - rows[r][k] * b;
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::optional<RatVec> solve_rational(const std::vector<IntVec>& rows,
                                     const std::vector<Rat>& rhs,
                                     size_t ncols) {
  size_t m = rows.size();
  std::vector<RatVec> a(m, RatVec(ncols + 1, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < ncols; ++j) a[i][j] = Rat(rows[i][j]);
    a[i][ncols] = rhs[i];
  }
  std::vector<int> pivot_col(m, -1);
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m; ++c) {
    size_t piv = r;
    while (piv < m && a[piv][c] == Rat(0)) ++piv;
    if (piv == m) continue;
    std::swap(a[r], a[piv]);
    Rat d = a[r][c];
    for (size_t k = c; k <= ncols; ++k) a[r][k] /= d;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == Rat(0)) continue;
      Rat f = a[i][c];
      for (size_t k = c; k <= ncols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col[r] = static_cast<int>(c);
    ++r;
  }
  for (size_t i = r; i < m; ++i)
    if (a[i][ncols] != Rat(0)) return std::nullopt;
  RatVec x(ncols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][ncols];
  return x;
}

int RootSystem::index_of(const IntVec& root) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == root) return static_cast<int>(i);
  return -1;
}

namespace {

/// Coefficients of roots[i] over the simple basis, solved exactly.
std::vector<RatVec> simple_coefficients(const RootSystem& rs,
                                        std::vector<std::string>* problems) {
  std::vector<IntVec> cols;  // system: sum_j x_j * simple_j = root, per coordinate
  size_t n = rs.ambient_rank, m = rs.num_simple();
  std::vector<IntVec> rows(n, IntVec(m, 0));
  for (size_t coord = 0; coord < n; ++coord)
    for (size_t j = 0; j < m; ++j) rows[coord][j] = rs.roots[rs.simple[j]][coord];
  std::vector<RatVec> out(rs.size());
  for (size_t i = 0; i < rs.size(); ++i) {
    std::vector<Rat> rhs(n);
    for (size_t coord = 0; coord < n; ++coord) rhs[coord] = Rat(rs.roots[i][coord]);
    auto sol = solve_rational(rows, rhs, m);
    if (!sol) {
      if (problems)
        problems->push_back("root is not in the span of the simple roots");
      out[i] = RatVec(m, Rat(0));
    } else {
      out[i] = *sol;
    }
  }
  return out;
}

}  // namespace

Int RootSystem::height(int i) const {
  auto coeffs = simple_coefficients(*this, nullptr);
  Rat h(0);
  for (auto& c : coeffs[i]) h += c;
  if (h.denominator() != 1) throw std::logic_error("non-integral root height");
  return h.numerator();
}

IntVec RootSystem::two_rho_coroot() const {
  IntVec s(ambient_rank, 0);
  for (size_t i = 0; i < roots.size(); ++i)
    if (positive[i]) s = add(s, coroot_free[i]);
  return s;
}

RootSystem build_root_system(size_t ambient_rank,
                             const std::vector<IntVec>& roots,
                             const std::vector<IntVec>& simple_roots,
                             const std::vector<IntVec>& simple_coroot_free) {
  std::vector<std::string> problems;
  RootSystem rs;
  rs.ambient_rank = ambient_rank;
  rs.roots = roots;

  for (auto& r : roots) {
    if (r.size() != ambient_rank)
      problems.push_back("root has wrong dimension");
    if (is_zero(r)) problems.push_back("zero vector listed as a root");
  }
  if (!problems.empty()) throw BuildError{problems};

  std::set<IntVec> root_set(roots.begin(), roots.end());
  if (root_set.size() != roots.size()) problems.push_back("duplicate roots");
  for (auto& r : roots)
    if (root_set.count(scale(2, r)))
      problems.push_back("NonReduced: both a and 2a occur");

  if (simple_roots.size() != simple_coroot_free.size())
    problems.push_back("coroot list does not match simple root list");
  for (auto& s : simple_roots)
    if (rs.index_of(s) < 0) problems.push_back("simple root not in root list");
  if (!problems.empty()) throw BuildError{problems};

  for (auto& s : simple_roots) rs.simple.push_back(rs.index_of(s));
  if (int_rank(simple_roots) != simple_roots.size())
    problems.push_back("simple roots are linearly dependent");

  // Coroot closure from the configured simple coroots.
  size_t N = roots.size();
  rs.coroot_free.assign(N, {});
  std::vector<bool> have(N, false);
  for (size_t j = 0; j < rs.simple.size(); ++j) {
    int idx = rs.simple[j];
    if (simple_coroot_free[j].size() != ambient_rank) {
      problems.push_back("BadCartanPairing: coroot has wrong dimension");
      continue;
    }
    if (dot(roots[idx], simple_coroot_free[j]) != 2)
      problems.push_back("BadCartanPairing: <a, a^vee> != 2 for simple root " +
                         std::to_string(j));
    rs.coroot_free[idx] = simple_coroot_free[j];
    have[idx] = true;
  }
  if (!problems.empty()) throw BuildError{problems};

  std::queue<int> bfs;
  for (int i : rs.simple) bfs.push(i);
  while (!bfs.empty()) {
    int b = bfs.front();
    bfs.pop();
    for (size_t j = 0; j < rs.simple.size(); ++j) {
      int sj = rs.simple[j];
      Int pair_root = dot(roots[b], simple_coroot_free[j]);
      IntVec img = sub(roots[b], scale(pair_root, roots[sj]));
      int img_idx = rs.index_of(img);
      if (img_idx < 0) {
        problems.push_back("NotClosedUnderReflection: image of a root missing");
        continue;
      }
      Int pair_co = dot(roots[sj], rs.coroot_free[b]);
      IntVec img_co = sub(rs.coroot_free[b], scale(pair_co, simple_coroot_free[j]));
      if (have[img_idx]) {
        if (rs.coroot_free[img_idx] != img_co)
          problems.push_back("inconsistent coroot closure");
      } else {
        rs.coroot_free[img_idx] = img_co;
        have[img_idx] = true;
        bfs.push(img_idx);
      }
    }
    if (!problems.empty()) throw BuildError{problems};
  }
  for (size_t i = 0; i < N; ++i)
    if (!have[i])
      problems.push_back("root not reachable from the simple roots");
  if (!problems.empty()) throw BuildError{problems};

  for (size_t i = 0; i < N; ++i)
    if (dot(roots[i], rs.coroot_free[i]) != 2)
      problems.push_back("BadCartanPairing: derived coroot fails <a,a^vee>=2");

  // Positivity and components via the simple-basis expansion.
  auto coeffs = simple_coefficients(rs, &problems);
  if (!problems.empty()) throw BuildError{problems};
  rs.positive.assign(N, false);
  for (size_t i = 0; i < N; ++i) {
    bool has_pos = false, has_neg = false;
    for (auto& c : coeffs[i]) {
      if (c > Rat(0)) has_pos = true;
      if (c < Rat(0)) has_neg = true;
    }
    if (has_pos && has_neg)
      problems.push_back("simple set is not a base (mixed-sign expansion)");
    rs.positive[i] = has_pos && !has_neg;
  }
  if (!problems.empty()) throw BuildError{problems};

  // Components: union-find over simples linked by nonzero Cartan pairing.
  size_t m = rs.num_simple();
  std::vector<int> comp_of_simple(m);
  std::iota(comp_of_simple.begin(), comp_of_simple.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp_of_simple[x] != x) x = comp_of_simple[x] = comp_of_simple[comp_of_simple[x]];
    return x;
  };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i != j && dot(rs.roots[rs.simple[i]], rs.coroot_free[rs.simple[j]]) != 0)
        comp_of_simple[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::map<int, int> relabel;
  for (size_t i = 0; i < m; ++i) {
    int r = find(static_cast<int>(i));
    if (!relabel.count(r)) {
      int id = static_cast<int>(relabel.size());
      relabel[r] = id;
    }
  }
  rs.component.assign(N, -1);
  for (size_t i = 0; i < N; ++i) {
    for (size_t j = 0; j < m; ++j)
      if (coeffs[i][j] != Rat(0)) {
        int c = relabel[find(static_cast<int>(j))];
        if (rs.component[i] >= 0 && rs.component[i] != c)
          problems.push_back("root spans multiple components");
        rs.component[i] = c;
      }
  }
  if (!problems.empty()) throw BuildError{problems};

  size_t ncomp = relabel.size();
  rs.highest.assign(ncomp, -1);
  std::vector<RatVec> best(ncomp);
  for (size_t i = 0; i < N; ++i) {
    if (!rs.positive[i]) continue;
    int c = rs.component[i];
    Rat h(0);
    for (auto& x : coeffs[i]) h += x;
    Rat bh(0);
    if (rs.highest[c] >= 0)
      for (auto& x : best[c]) bh += x;
    if (rs.highest[c] < 0 || h > bh) {
      rs.highest[c] = static_cast<int>(i);
      best[c] = coeffs[i];
    }
  }
  // The highest root must dominate every root of its component coefficientwise.
  for (size_t i = 0; i < N; ++i) {
    int c = rs.component[i];
    for (size_t j = 0; j < m; ++j)
      if (best[c][j] < coeffs[i][j]) {
        problems.push_back("highest root does not dominate component");
        break;
      }
  }
  if (!problems.empty()) throw BuildError{problems};

  rs.negation.assign(N, -1);
  for (size_t i = 0; i < N; ++i) {
    rs.negation[i] = rs.index_of(negate(rs.roots[i]));
    if (rs.negation[i] < 0) problems.push_back("root system not symmetric");
  }
  if (!problems.empty()) throw BuildError{problems};
  return rs;
}

namespace {

NamedTypeData classical(const std::string& type) {
  char fam = type[0];
  size_t k = std::stoul(type.substr(1));
  NamedTypeData d;
  auto e = [&](size_t i, size_t n) {
    IntVec v(n, 0);
    v[i] = 1;
    return v;
  };
  if (fam == 'A') {
    size_t n = k + 1;
    d.rank = n;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j) d.roots.push_back(sub(e(i, n), e(j, n)));
    for (size_t i = 0; i + 1 < n; ++i) {
      d.simple_roots.push_back(sub(e(i, n), e(i + 1, n)));
      d.simple_coroots.push_back(sub(e(i, n), e(i + 1, n)));
    }
    return d;
  }
  size_t n = k;
  d.rank = n;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          IntVec v(n, 0);
          v[i] = si;
          v[j] = sj;
          d.roots.push_back(v);
        }
  if (fam == 'B') {
    for (size_t i = 0; i < n; ++i) {
      d.roots.push_back(e(i, n));
      d.roots.push_back(negate(e(i, n)));
    }
    for (size_t i = 0; i + 1 < n; ++i) {
      d.simple_roots.push_back(sub(e(i, n), e(i + 1, n)));
      d.simple_coroots.push_back(sub(e(i, n), e(i + 1, n)));
    }
    d.simple_roots.push_back(e(n - 1, n));
    d.simple_coroots.push_back(scale(2, e(n - 1, n)));
  } else if (fam == 'C') {
    for (size_t i = 0; i < n; ++i) {
      d.roots.push_back(scale(2, e(i, n)));
      d.roots.push_back(scale(-2, e(i, n)));
    }
    for (size_t i = 0; i + 1 < n; ++i) {
      d.simple_roots.push_back(sub(e(i, n), e(i + 1, n)));
      d.simple_coroots.push_back(sub(e(i, n), e(i + 1, n)));
    }
    d.simple_roots.push_back(scale(2, e(n - 1, n)));
    d.simple_coroots.push_back(e(n - 1, n));
  } else if (fam == 'D') {
    for (size_t i = 0; i + 1 < n; ++i) {
      d.simple_roots.push_back(sub(e(i, n), e(i + 1, n)));
      d.simple_coroots.push_back(sub(e(i, n), e(i + 1, n)));
    }
    d.simple_roots.push_back(add(e(n - 2, n), e(n - 1, n)));
    d.simple_coroots.push_back(add(e(n - 2, n), e(n - 1, n)));
  } else {
    throw BuildError{{"unknown named type: " + type}};
  }
  return d;
}

/// Generate all roots by reflection closure from simples in fundamental
/// coordinates (used for the exceptional types).
NamedTypeData from_cartan(size_t rank, const std::vector<IntVec>& cartan_cols) {
  NamedTypeData d;
  d.rank = rank;
  for (size_t i = 0; i < rank; ++i) {
    IntVec a(rank, 0);
    a[i] = 1;
    d.simple_roots.push_back(a);
    d.simple_coroots.push_back(cartan_cols[i]);
  }
  std::set<IntVec> all(d.simple_roots.begin(), d.simple_roots.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntVec> cur(all.begin(), all.end());
    for (auto& b : cur)
      for (size_t j = 0; j < rank; ++j) {
        IntVec img = sub(b, scale(dot(b, d.simple_coroots[j]), d.simple_roots[j]));
        if (!all.count(img)) {
          all.insert(img);
          grew = true;
        }
      }
  }
  d.roots.assign(all.begin(), all.end());
  return d;
}

}  // namespace

NamedTypeData named_type_data(const std::string& type) {
  if (type == "G2") return from_cartan(2, {{2, -3}, {-1, 2}});
  if (type == "F4")
    return from_cartan(
        4, {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  if (type.size() >= 2 && (type[0] == 'A' || type[0] == 'B' || type[0] == 'C' ||
                           type[0] == 'D'))
    return classical(type);
  throw BuildError{{"unknown named type: " + type}};
}

RootSystem build_root_system(const std::string& named_type) {
  auto d = named_type_data(named_type);
  return build_root_system(d.rank, d.roots, d.simple_roots, d.simple_coroots);
}

std::vector<std::string> RootSystem::component_types() const {
  std::vector<std::string> out;
  for (size_t c = 0; c < num_components(); ++c) {
    std::vector<int> s;  // positions into `simple`
    for (size_t j = 0; j < num_simple(); ++j)
      if (component[simple[j]] == static_cast<int>(c)) s.push_back(static_cast<int>(j));
    size_t m = s.size();
    auto cart = [&](int a, int b) {
      return dot(roots[simple[s[a]]], coroot_free[simple[s[b]]]);
    };
    if (m == 1) {
      out.push_back("A1");
      continue;
    }
    std::vector<std::vector<int>> adj(m);
    bool ok = true;
    int double_edges = 0, triple_edges = 0;
    std::pair<int, int> heavy{-1, -1};
    for (size_t a = 0; a < m && ok; ++a)
      for (size_t b = a + 1; b < m; ++b) {
        Int p = cart(static_cast<int>(a), static_cast<int>(b));
        Int q = cart(static_cast<int>(b), static_cast<int>(a));
        if (p == 0 && q == 0) continue;
        adj[a].push_back(static_cast<int>(b));
        adj[b].push_back(static_cast<int>(a));
        Int bond = p * q;
        if (bond == 2) {
          ++double_edges;
          // orient: the node whose coroot pairs to -2 is the long one
          heavy = (p == -2) ? std::make_pair(static_cast<int>(a), static_cast<int>(b))
                            : std::make_pair(static_cast<int>(b), static_cast<int>(a));
        } else if (bond == 3) {
          ++triple_edges;
        } else if (bond != 1) {
          ok = false;
        }
      }
    if (!ok) {
      out.push_back("?");
      continue;
    }
    if (triple_edges == 1 && m == 2) {
      out.push_back("G2");
      continue;
    }
    // path / branch analysis
    std::vector<int> deg(m);
    int branch = -1, leaves = 0;
    for (size_t a = 0; a < m; ++a) {
      deg[a] = static_cast<int>(adj[a].size());
      if (deg[a] == 1) ++leaves;
      if (deg[a] == 3) branch = static_cast<int>(a);
      if (deg[a] > 3) ok = false;
    }
    if (!ok) {
      out.push_back("?");
      continue;
    }
    if (double_edges == 0 && branch < 0) {
      out.push_back("A" + std::to_string(m));
    } else if (double_edges == 0 && branch >= 0 && leaves == 3) {
      std::vector<int> arms;
      for (int nb : adj[branch]) {
        int len = 1, prev = branch, cur = nb;
        while (deg[cur] == 2) {
          int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1)
        out.push_back("D" + std::to_string(m));
      else if (arms == std::vector<int>{1, 2, 2})
        out.push_back("E6");
      else if (arms == std::vector<int>{1, 2, 3})
        out.push_back("E7");
      else if (arms == std::vector<int>{1, 2, 4})
        out.push_back("E8");
      else
        out.push_back("?");
    } else if (double_edges == 1 && branch < 0) {
      // heavy.first is the long node of the double bond
      int lo = heavy.first, sh = heavy.second;
      if (m == 2) {
        out.push_back("B2");
      } else if (deg[sh] == 1) {
        out.push_back("B" + std::to_string(m));
      } else if (deg[lo] == 1) {
        out.push_back("C" + std::to_string(m));
      } else if (m == 4) {
        out.push_back("F4");
      } else {
        out.push_back("?");
      }
    } else {
      out.push_back("?");
    }
  }
  return out;
}

std::string RootSystem::type_string() const {
  auto t = component_types();
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += "x";
    s += t[i];
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// WeylTable

std::string WeylTable::perm_key(const std::vector<uint16_t>& p) {
  return std::string(reinterpret_cast<const char*>(p.data()),
                     p.size() * sizeof(uint16_t));
}

WeylTable::WeylTable(const RootSystem& rs) : rs_(&rs) {
  size_t N = rs.size(), n = rs.ambient_rank;
  // simple reflection permutations and matrices
  std::vector<std::vector<uint16_t>> gen_perm;
  std::vector<IntVec> gen_mat;
  for (size_t j = 0; j < rs.num_simple(); ++j) {
    int sj = rs.simple[j];
    std::vector<uint16_t> p(N);
    for (size_t r = 0; r < N; ++r) {
      IntVec img = sub(rs.roots[r], scale(dot(rs.roots[r], rs.coroot_free[sj]),
                                          rs.roots[sj]));
      int idx = rs.index_of(img);
      if (idx < 0) throw std::logic_error("WeylTable: reflection image missing");
      p[r] = static_cast<uint16_t>(idx);
    }
    gen_perm.push_back(p);
    IntVec mat(n * n, 0);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        mat[a * n + b] = (a == b ? 1 : 0) - rs.coroot_free[sj][a] * rs.roots[sj][b];
    gen_mat.push_back(mat);
  }

  std::vector<uint16_t> id(N);
  for (size_t r = 0; r < N; ++r) id[r] = static_cast<uint16_t>(r);
  IntVec idmat(n * n, 0);
  for (size_t a = 0; a < n; ++a) idmat[a * n + a] = 1;
  perm_.push_back(id);
  act_mat_.push_back(idmat);
  index_[perm_key(id)] = 0;

  // BFS closure under right multiplication by the generators
  for (size_t head = 0; head < perm_.size(); ++head) {
    auto wp = perm_[head];
    auto wm = act_mat_[head];
    for (size_t j = 0; j < gen_perm.size(); ++j) {
      std::vector<uint16_t> np(N);
      for (size_t r = 0; r < N; ++r) np[r] = wp[gen_perm[j][r]];
      auto key = perm_key(np);
      if (index_.count(key)) continue;
      IntVec nm(n * n, 0);
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
          Int s = 0;
          for (size_t k = 0; k < n; ++k) s += wm[a * n + k] * gen_mat[j][k * n + b];
          nm[a * n + b] = s;
        }
      index_[key] = static_cast<int>(perm_.size());
      perm_.push_back(np);
      act_mat_.push_back(nm);
    }
  }

  nelts_ = perm_.size();
  length_.resize(nelts_);
  inv_.resize(nelts_);
  for (size_t w = 0; w < nelts_; ++w) {
    int len = 0;
    for (size_t r = 0; r < N; ++r)
      if (rs.positive[r] && !rs.positive[perm_[w][r]]) ++len;
    length_[w] = len;
    std::vector<uint16_t> ip(N);
    for (size_t r = 0; r < N; ++r) ip[perm_[w][r]] = static_cast<uint16_t>(r);
    inv_[w] = index_of_perm(ip);
  }
  mult_.assign(nelts_ * nelts_, 0);
  for (size_t a = 0; a < nelts_; ++a)
    for (size_t b = 0; b < nelts_; ++b) {
      std::vector<uint16_t> p(N);
      for (size_t r = 0; r < N; ++r) p[r] = perm_[a][perm_[b][r]];
      mult_[a * nelts_ + b] = index_of_perm(p);
    }

  simple_refl_.resize(rs.num_simple());
  for (size_t j = 0; j < gen_perm.size(); ++j)
    simple_refl_[j] = index_of_perm(gen_perm[j]);
  refl_.resize(N);
  for (size_t r = 0; r < N; ++r) {
    std::vector<uint16_t> p(N);
    for (size_t x = 0; x < N; ++x) {
      IntVec img = sub(rs.roots[x],
                       scale(dot(rs.roots[x], rs.coroot_free[r]), rs.roots[r]));
      int idx = rs.index_of(img);
      if (idx < 0) throw std::logic_error("WeylTable: root reflection missing");
      p[x] = static_cast<uint16_t>(idx);
    }
    refl_[r] = index_of_perm(p);
  }
}

int WeylTable::index_of_perm(const std::vector<uint16_t>& p) const {
  auto it = index_.find(perm_key(p));
  if (it == index_.end()) throw std::logic_error("WeylTable: unknown permutation");
  return it->second;
}

std::vector<int> WeylTable::word(int w) const {
  std::vector<int> out;
  while (w != 0) {
    int wi = inv_[w];
    bool found = false;
    for (size_t j = 0; j < simple_refl_.size(); ++j) {
      // left descent: w^{-1}(alpha_j) < 0
      int img = perm_[wi][rs_->simple[j]];
      if (!rs_->positive[img]) {
        out.push_back(static_cast<int>(j));
        w = mult(simple_refl_[j], w);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("WeylTable: descent not found");
  }
  return out;
}

IntVec WeylTable::act_free(int w, const IntVec& x) const {
  size_t n = rs_->ambient_rank;
  IntVec y(n, 0);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) y[a] += act_mat_[w][a * n + b] * x[b];
  return y;
}

RatVec WeylTable::act_free(int w, const RatVec& x) const {
  size_t n = rs_->ambient_rank;
  RatVec y(n, Rat(0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) y[a] += Rat(act_mat_[w][a * n + b]) * x[b];
  return y;
}

int WeylTable::longest_element() const {
  int best = 0;
  for (size_t w = 0; w < perm_.size(); ++w)
    if (length_[w] > length_[best]) best = static_cast<int>(w);
  return best;
}

}  // namespace hecke

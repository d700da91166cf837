#include "hecke/cli.hpp"

#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/config.hpp"
#include "hecke/format.hpp"
#include "hecke/verify.hpp"

namespace hecke {

namespace {

using nlohmann::ordered_json;

std::string intvec_str(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

ordered_json hecke_json(const Algebra& a, const HeckeElt& h, bool normalized) {
  ordered_json terms = ordered_json::array();
  const auto& g = a.group();
  // reuse the table ordering by re-rendering each term separately
  std::vector<std::pair<ExtElt, LaurentInt>> rows(h.terms.begin(), h.terms.end());
  std::sort(rows.begin(), rows.end(),
            [&](const auto& x, const auto& y) {
              auto kx = std::make_tuple(render_ext(g, g.omega_projection(x.first)),
                                        g.length(x.first), render_ext(g, x.first));
              auto ky = std::make_tuple(render_ext(g, g.omega_projection(y.first)),
                                        g.length(y.first), render_ext(g, y.first));
              return kx < ky;
            });
  for (auto& [w, c] : rows) {
    ordered_json t;
    t["basis"] = render_ext(g, w);
    LaurentInt cc = normalized
                        ? c * LaurentInt::v_power(static_cast<int>(a.weight(w)))
                        : c;
    t["coeff"] = cc.str();
    terms.push_back(t);
  }
  ordered_json j;
  j["normalized"] = normalized;
  j["terms"] = terms;
  return j;
}

struct Options {
  std::string config_path;
  int window = 6;
  uint64_t seed = 0;
  bool normalized = false;
  std::string output = "table";
};

int cmd_info(const Options& opt, const AlgebraConfig& cfg, const Algebra& a,
             std::ostream& out) {
  const auto& g = a.group();
  const auto& rs = g.roots();
  ordered_json j;
  j["name"] = cfg.name;
  j["description"] = cfg.description;
  j["type"] = rs.type_string();
  j["rank"] = rs.ambient_rank;
  j["num_roots"] = rs.size();
  j["weyl_order"] = g.weyl().size();
  std::string lattice = "Z^" + std::to_string(g.lattice().free_rank());
  for (Int d : g.lattice().torsion_orders())
    lattice += " + Z/" + std::to_string(d);
  j["translation_group"] = lattice;
  ordered_json gens = ordered_json::array();
  for (int i = 0; i < g.delta_size(); ++i) {
    const auto& d = g.delta_aff()[i];
    ordered_json jg;
    jg["name"] = d.name;
    jg["wall_root"] = intvec_str(rs.roots[d.root_idx]);
    jg["wall_level"] = d.level;
    jg["weight"] = a.params().weight[i];
    gens.push_back(jg);
  }
  j["affine_generators"] = gens;
  ordered_json om = ordered_json::array();
  for (auto& tau : g.omega_elements()) om.push_back(render_ext(g, tau));
  j["alcove_stabilizer"] = om;
  ordered_json fams = ordered_json::array();
  std::set<int> seen;
  for (size_t root = 0; root < rs.size(); ++root) {
    if (!rs.positive[root] || seen.count(static_cast<int>(root))) continue;
    for (size_t w = 0; w < g.weyl().size(); ++w) {
      int img = g.weyl().apply(static_cast<int>(w), static_cast<int>(root));
      seen.insert(img);
      seen.insert(rs.negation[img]);
    }
    ordered_json jf;
    jf["root"] = intvec_str(rs.roots[root]);
    jf["transitive"] = g.family_transitive(static_cast<int>(root));
    jf["L_H0"] =
        g.wall_parameter(g.canonical_wall(static_cast<int>(root), 0), a.params());
    jf["L_H1"] =
        g.wall_parameter(g.canonical_wall(static_cast<int>(root), 1), a.params());
    fams.push_back(jf);
  }
  j["wall_families"] = fams;

  if (opt.output == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "name: " << cfg.name << "\n";
  if (!cfg.description.empty()) out << "description: " << cfg.description << "\n";
  out << "root system: " << rs.type_string() << "  (" << rs.size()
      << " roots, ambient rank " << rs.ambient_rank << ")\n";
  out << "finite Weyl group order: " << g.weyl().size() << "\n";
  out << "translation group: " << lattice << "\n";
  out << "affine generators:\n";
  for (auto& jg : gens)
    out << "  " << jg["name"].get<std::string>() << "  wall <"
        << jg["wall_root"].get<std::string>()
        << ",x> = " << jg["wall_level"].get<Int>() << "  L=" << jg["weight"].get<Int>()
        << "\n";
  out << "alcove stabilizer (order " << om.size() << "):";
  for (auto& s : om) out << " " << s.get<std::string>();
  out << "\n";
  out << "wall families:\n";
  for (auto& jf : fams)
    out << "  family" << jf["root"].get<std::string>() << ": transitive="
        << (jf["transitive"].get<bool>() ? "true" : "false")
        << ", L(H0)=" << jf["L_H0"].get<Int>() << ", L(H1)=" << jf["L_H1"].get<Int>()
        << "\n";
  return 0;
}

int cmd_mul(const Options& opt, const Algebra& a, const std::string& lit_a,
            const std::string& lit_b, std::ostream& out) {
  ExtElt x = parse_ext(a.group(), lit_a);
  ExtElt y = parse_ext(a.group(), lit_b);
  HeckeElt p = a.mul(a.basis(x), a.basis(y));
  if (opt.output == "json") {
    ordered_json j;
    j["lhs"] = render_ext(a.group(), x);
    j["rhs"] = render_ext(a.group(), y);
    j["product"] = hecke_json(a, p, opt.normalized);
    out << j.dump(2) << "\n";
  } else {
    out << render_hecke(a, p, opt.normalized) << "\n";
  }
  return 0;
}

int cmd_theta(const Options& opt, const Algebra& a, const std::string& lit,
              std::ostream& out) {
  LamElt l = parse_lattice(a.group(), lit);
  HeckeElt th = a.theta(l);
  BernsteinForm cert = a.to_bernstein(th);
  if (opt.output == "json") {
    ordered_json j;
    j["lambda"] = render_lattice(a.group(), l);
    j["theta"] = hecke_json(a, th, opt.normalized);
    j["bernstein_certificate"] = render_bernstein(a, cert);
    out << j.dump(2) << "\n";
  } else {
    out << "theta" << render_lattice(a.group(), l) << " = "
        << render_hecke(a, th, opt.normalized) << "\n";
    out << "bernstein certificate: " << render_bernstein(a, cert) << "\n";
  }
  return 0;
}

int cmd_center(const Options& opt, const Algebra& a, const std::string& lit,
               std::ostream& out) {
  const auto& g = a.group();
  LamElt l = parse_lattice(g, lit);
  auto orbit = g.weyl_orbit(l);
  HeckeElt z = a.central_element(orbit);
  auto dec = a.center_decompose(z);
  if (opt.output == "json") {
    ordered_json j;
    ordered_json jo = ordered_json::array();
    for (auto& m : orbit) jo.push_back(render_lattice(g, m));
    j["orbit"] = jo;
    j["z"] = hecke_json(a, z, opt.normalized);
    j["central"] = dec.central;
    ordered_json jc = ordered_json::array();
    for (auto& [key, c] : dec.coeffs) {
      ordered_json e;
      e["orbit"] = render_lattice(g, key);
      e["coeff"] = c.str();
      jc.push_back(e);
    }
    j["decomposition"] = jc;
    out << j.dump(2) << "\n";
  } else {
    out << "orbit of " << render_lattice(g, l) << " (size " << orbit.size()
        << "):";
    for (auto& m : orbit) out << " " << render_lattice(g, m);
    out << "\n";
    out << "z = " << render_hecke(a, z, opt.normalized) << "\n";
    out << "central: " << (dec.central ? "true" : "false") << "\n";
    out << "decomposition:";
    for (auto& [key, c] : dec.coeffs)
      out << " z[" << render_lattice(g, key) << "] * (" << c.str() << ")";
    out << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, const AlgebraConfig& cfg, const Algebra& a,
               std::ostream& out) {
  VerificationReport rep = run_paper_suite(a, cfg.name, opt.window, opt.seed);
  if (opt.output == "json")
    out << rep.to_json().dump(2) << "\n";
  else
    out << rep.table();
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Iwahori-Hecke algebra toolkit"};
  app.require_subcommand(1);

  Options opt;
  std::string elt_a, elt_b, lambda;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", opt.config_path, "configuration file (JSON)")
        ->required();
    sub->add_option("--window", opt.window, "length window for checks");
    sub->add_option("--seed", opt.seed, "seed for sampled checks");
    sub->add_flag("--normalized", opt.normalized, "render the rescaled basis");
    sub->add_option("--output", opt.output, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
  };

  CLI::App* info = app.add_subcommand("info", "print the algebra's shape");
  add_common(info);
  CLI::App* mul = app.add_subcommand("mul", "multiply two basis elements");
  add_common(mul);
  mul->add_option("lhs", elt_a, "left basis element literal")->required();
  mul->add_option("rhs", elt_b, "right basis element literal")->required();
  CLI::App* theta = app.add_subcommand("theta", "Bernstein element of a translation");
  add_common(theta);
  theta->add_option("lambda", lambda, "translation literal (free;torsion)")
      ->required();
  CLI::App* center = app.add_subcommand("center", "orbit sum and its decomposition");
  add_common(center);
  center->add_option("lambda", lambda, "translation literal (free;torsion)")
      ->required();
  CLI::App* verify = app.add_subcommand("verify", "run the full relation suite");
  add_common(verify);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to stdout with a success code
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    AlgebraConfig cfg = load_config(opt.config_path);
    auto algebra = build_algebra(cfg);
    if (info->parsed()) return cmd_info(opt, cfg, *algebra, out);
    if (mul->parsed()) return cmd_mul(opt, *algebra, elt_a, elt_b, out);
    if (theta->parsed()) return cmd_theta(opt, *algebra, lambda, out);
    if (center->parsed()) return cmd_center(opt, *algebra, lambda, out);
    if (verify->parsed()) return cmd_verify(opt, cfg, *algebra, out);
    err << "no subcommand\n";
    return 2;
  } catch (const BuildError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hecke

#include "hecke/config.hpp"

#include <fstream>

#include "json.hpp"

namespace hecke {

namespace {

IntVec to_intvec(const nlohmann::json& j) {
  IntVec v;
  for (auto& x : j) v.push_back(x.get<Int>());
  return v;
}

}  // namespace

AlgebraConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("ParseError", "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw DomainError("ParseError", path + ": " + e.what());
  }
  try {
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
      throw DomainError("SchemaVersionMismatch", path + ": missing schema_version");
    if (j["schema_version"].get<int>() != kSchemaVersion)
      throw DomainError("SchemaVersionMismatch",
                        path + ": expected schema_version " +
                            std::to_string(kSchemaVersion) + ", got " +
                            j["schema_version"].dump());
    AlgebraConfig cfg;
    cfg.name = j.at("name").get<std::string>();
    cfg.description = j.value("description", "");
    cfg.free_rank = j.at("free_rank").get<size_t>();
    if (j.contains("torsion_orders"))
      cfg.torsion_orders = to_intvec(j["torsion_orders"]);
    for (auto& r : j.at("roots")) cfg.roots.push_back(to_intvec(r));
    for (auto& r : j.at("simple_roots")) cfg.simple_roots.push_back(to_intvec(r));
    for (auto& c : j.at("coroots")) {
      LamElt l;
      l.free = to_intvec(c.at("free"));
      if (c.contains("torsion")) l.tors = to_intvec(c["torsion"]);
      l.tors.resize(cfg.torsion_orders.size(), 0);
      cfg.coroots.push_back(std::move(l));
    }
    for (auto& [key, val] : j.at("params").items())
      cfg.params[key] = val.get<Int>();
    return cfg;
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    throw DomainError("ParseError", path + ": " + e.what());
  }
}

std::shared_ptr<Algebra> build_algebra(const AlgebraConfig& cfg) {
  RootSystem rs;
  try {
    std::vector<IntVec> coroot_free;
    for (auto& c : cfg.coroots) coroot_free.push_back(c.free);
    rs = build_root_system(cfg.free_rank, cfg.roots, cfg.simple_roots,
                           coroot_free);
  } catch (BuildError& e) {
    throw BuildError{e.problems};
  }
  auto group = std::make_shared<GroupContext>(rs, cfg.torsion_orders, cfg.coroots);

  // assemble weights by generator name, and insist on an exact key match
  std::vector<std::string> problems;
  ParamSys p;
  p.weight.assign(group->delta_size(), 0);
  std::map<std::string, Int> remaining = cfg.params;
  for (int i = 0; i < group->delta_size(); ++i) {
    auto it = remaining.find(group->delta_aff()[i].name);
    if (it == remaining.end()) {
      problems.push_back("missing parameter for generator " +
                         group->delta_aff()[i].name);
      continue;
    }
    p.weight[i] = it->second;
    remaining.erase(it);
  }
  for (auto& [k, v] : remaining) {
    (void)v;
    problems.push_back("parameter for unknown generator " + k);
  }
  if (!problems.empty()) throw BuildError{problems};
  auto viol = group->validate_params(p);
  for (auto& v : viol)
    problems.push_back("params " + v.gen_a + "/" + v.gen_b + ": " + v.reason);
  if (!problems.empty()) throw BuildError{problems};
  std::shared_ptr<const GroupContext> cg = group;
  return std::make_shared<Algebra>(cg, p);
}

}  // namespace hecke

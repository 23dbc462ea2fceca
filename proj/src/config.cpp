#include "wco/config.hpp"

#include <sstream>

namespace wco {

namespace {

Symbol symbol_from_json(const json& j) {
  if (j.contains("one")) {
    const int dim = j.at("one").at("dimension").get<int>();
    return Symbol::one(dim);
  }
  if (j.contains("constant")) {
    const auto& c = j.at("constant");
    return Symbol::constant(c.at("dimension").get<int>(),
                            cdouble(c.at("re").get<double>(),
                                    c.value("im", 0.0)));
  }
  if (j.contains("poly")) return Symbol(poly_from_json(j.at("poly")));
  if (j.contains("lacunary")) {
    const auto& l = j.at("lacunary");
    const LacunarySeries s = lacunary_from_json(l);
    return lacunary_symbol(s, l.value("antiderivative_order", 0),
                           l.value("window_width", 0.5));
  }
  throw ConfigError("symbol spec needs one|constant|poly|lacunary");
}

std::optional<SelfMap> map_from_json(const json& j) {
  if (j.contains("scaled_identity")) {
    const auto& s = j.at("scaled_identity");
    return SelfMap::scaled_identity(
        s.at("dimension").get<int>(),
        cdouble(s.at("factor").get<double>(), s.value("factor_im", 0.0)));
  }
  if (j.contains("components")) return selfmap_from_json(j);
  if (j.contains("none")) return std::nullopt;
  throw ConfigError("map spec needs scaled_identity|components|none");
}

}  // namespace

RunConfig parse_config_json(const json& j) {
  try {
    RunConfig cfg;
    cfg.name = j.value("name", "run");
    cfg.nu = weight_from_json(j.at("nu"));
    cfg.mu = weight_from_json(j.at("mu"));
    const Symbol psi = symbol_from_json(j.at("psi"));
    const int p = j.at("p").get<int>();
    auto phi = map_from_json(j.at("phi"));
    if (phi) {
      cfg.pair = SymbolPair::from_map(psi, *phi, p);
    } else if (j.contains("phi_p")) {
      cfg.pair = SymbolPair::component_only(psi, symbol_from_json(j.at("phi_p")), p);
    } else {
      throw ConfigError("config needs a map or a phi_p component");
    }
    cfg.n = j.at("n").get<int>();
    cfg.m = j.at("m").get<int>();
    if (j.contains("n0")) cfg.n0 = j.at("n0").get<int>();
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      cfg.grid.directions = g.value("directions", 256);
      cfg.grid.m_lo = g.value("min_m", 3);
      cfg.grid.m_hi = g.value("max_m", 14);
      cfg.grid.seed = g.value("seed", std::uint64_t{12345});
    }
    if (cfg.n < 0 || cfg.m < 0) throw ConfigError("orders must be >= 0");
    if (cfg.pair.p < 1 || cfg.pair.p > cfg.pair.dim())
      throw ConfigError("coordinate p outside the dimension");
    if (cfg.grid.m_hi > 24 || cfg.grid.directions > 4096)
      throw ConfigError("grid parameters exceed caps (max_m 24, dirs 4096)");
    return cfg;
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // recover line/column from the byte offset
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < std::min(text.size(), e.byte); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << "config parse error at line " << line << ", column " << col << ": "
        << e.what();
    throw ConfigError(msg.str());
  }
  return parse_config_json(j);
}

bool is_builtin_config(const std::string& name) {
  for (const auto& n : builtin_config_names())
    if (n == name) return true;
  return false;
}

std::vector<std::string> builtin_config_names() {
  return {"contraction", "identity-singular"};
}

json builtin_config(const std::string& name) {
  if (name == "contraction") {
    return json{
        {"name", "contraction"},
        {"nu", {{"name", "standard"}, {"alpha", 0.5}}},
        {"mu", {{"name", "standard"}, {"alpha", 0.5}}},
        {"psi", {{"one", {{"dimension", 2}}}}},
        {"phi", {{"scaled_identity", {{"dimension", 2}, {"factor", 0.5}}}}},
        {"p", 1},
        {"n", 1},
        {"m", 1},
        {"grid",
         {{"directions", 128}, {"min_m", 3}, {"max_m", 12}, {"seed", 12345}}}};
  }
  if (name == "identity-singular") {
    return json{
        {"name", "identity-singular"},
        {"nu", {{"name", "standard"}, {"alpha", 1.0}}},
        {"mu", {{"name", "standard"}, {"alpha", 1.0}}},
        {"psi", {{"one", {{"dimension", 2}}}}},
        {"phi", {{"scaled_identity", {{"dimension", 2}, {"factor", 1.0}}}}},
        {"p", 1},
        {"n", 1},
        {"m", 1},
        {"grid",
         {{"directions", 128}, {"min_m", 3}, {"max_m", 12}, {"seed", 12345}}}};
  }
  throw ConfigError("unknown builtin config: " + name);
}

}  // namespace wco

#include "wco/symbol_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wco {

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["exponents"] = e;
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(t);
  }
  return json{{"dimension", p.dim()}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j) {
  MultiPoly p(j.at("dimension").get<int>());
  for (const auto& t : j.at("terms")) {
    p.add_term(t.at("exponents").get<std::vector<int>>(),
               cdouble(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return p;
}

json lacunary_to_json(const LacunarySeries& s) {
  return json{{"dim", s.dim}, {"p", s.p},     {"q", s.q},
              {"alpha", s.alpha}, {"K", s.K}};
}

LacunarySeries lacunary_from_json(const json& j) {
  LacunarySeries s;
  s.dim = j.at("dim").get<int>();
  s.p = j.at("p").get<int>();
  s.q = j.at("q").get<int>();
  s.alpha = j.at("alpha").get<double>();
  s.K = j.at("K").get<int>();
  return s;
}

json selfmap_to_json(const SelfMap& m) {
  json comps = json::array();
  for (const auto& c : m.components()) comps.push_back(poly_to_json(c));
  return json{{"components", comps}};
}

SelfMap selfmap_from_json(const json& j) {
  std::vector<MultiPoly> comps;
  for (const auto& c : j.at("components")) comps.push_back(poly_from_json(c));
  return SelfMap(std::move(comps));
}

json weight_to_json_spec(const std::string& name, double alpha) {
  if (name == "unit") return json{{"name", "unit"}};
  return json{{"name", name}, {"alpha", alpha}};
}

RadialWeight weight_from_json(const json& j) {
  if (j.contains("table")) {
    std::vector<std::pair<double, double>> table;
    for (const auto& row : j.at("table"))
      table.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
    return tabulated_weight(table, j.at("a").get<double>(),
                            j.at("b").get<double>(),
                            j.value("delta", 0.0));
  }
  const std::string name = j.at("name").get<std::string>();
  if (name == "unit") return unit_weight();
  if (name == "standard") return standard_weight(j.at("alpha").get<double>());
  throw std::invalid_argument("unknown weight name: " + name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename into " + path);
}

}  // namespace wco

#ifndef WCO_SYMBOL_IO_HPP
#define WCO_SYMBOL_IO_HPP

#include <string>

#include "json.hpp"
#include "wco/lacunary.hpp"
#include "wco/multipoly.hpp"
#include "wco/selfmap.hpp"
#include "wco/weights.hpp"

namespace wco {

using json = nlohmann::json;

// JSON forms; doubles round-trip bit-exactly through the serializer.
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

json lacunary_to_json(const LacunarySeries& s);
LacunarySeries lacunary_from_json(const json& j);

json selfmap_to_json(const SelfMap& m);
SelfMap selfmap_from_json(const json& j);

// {"name":"standard","alpha":..} | {"name":"unit"} |
// {"table":[[t,w],..],"a":..,"b":..,"delta":..}
json weight_to_json_spec(const std::string& name, double alpha);
RadialWeight weight_from_json(const json& j);

std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace wco

#endif  // WCO_SYMBOL_IO_HPP

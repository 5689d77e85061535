#include "skewres/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace skewres {

FieldConfig parse_field_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::config_error, std::string("bad config JSON: ") + e.what());
  }
  FieldConfig cfg;
  try {
    cfg.p = j.at("p").get<std::uint32_t>();
    cfg.s = j.value("s", 1u);
    cfg.r = j.at("r").get<std::uint32_t>();
    cfg.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  } catch (const nlohmann::json::exception& e) {
    fail(errc::config_error, std::string("bad config fields: ") + e.what());
  }
  return cfg;
}

FieldConfig load_field_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::config_error, "cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_field_config(ss.str());
}

std::string field_config_to_json(const FieldConfig& cfg) {
  nlohmann::ordered_json j;
  j["p"] = cfg.p;
  j["s"] = cfg.s;
  j["r"] = cfg.r;
  j["modulus"] = cfg.modulus;
  return j.dump();
}

}  // namespace skewres

#ifndef SKEWRES_JSON_IO_HPP
#define SKEWRES_JSON_IO_HPP

#include <string>

#include "skewres/field_tower.hpp"

namespace skewres {

// Parses {"p":5,"s":1,"r":2,"modulus":[3,0,1]} (modulus constant-first).
FieldConfig parse_field_config(const std::string& json_text);
FieldConfig load_field_config(const std::string& path);
std::string field_config_to_json(const FieldConfig& cfg);

}  // namespace skewres

#endif

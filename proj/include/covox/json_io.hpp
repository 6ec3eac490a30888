#pragma once

#include <json.hpp>

#include "covox/errors.hpp"
#include "covox/little_group.hpp"

namespace covox {

inline void to_json(nlohmann::json& j, const Unimodular2& m) {
  j = nlohmann::json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

inline void from_json(const nlohmann::json& j, Unimodular2& m) {
  if (!j.is_object())
    throw domain_error("matrix JSON must be an object with keys a, b, c, d");
  for (const char* key : {"a", "b", "c", "d"}) {
    if (!j.contains(key) || !j.at(key).is_number())
      throw domain_error(std::string("matrix JSON missing numeric key '") +
                         key + "'");
  }
  m.a = j.at("a").get<double>();
  m.b = j.at("b").get<double>();
  m.c = j.at("c").get<double>();
  m.d = j.at("d").get<double>();
}

//! Parses a matrix from the CLI's own JSON dialect; round-trips with
//! to_json above.
inline Unimodular2 matrix_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw domain_error("invalid JSON: '" + text + "'");
  return j.get<Unimodular2>();
}

} // namespace covox

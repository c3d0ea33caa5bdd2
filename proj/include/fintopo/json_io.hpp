#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fintopo/fin_space.hpp"
#include "fintopo/space_map.hpp"

namespace fintopo {

// Space document: {"points": ["a","b"], "min_nbhd": {"a": ["a","b"], ...}}.
// Set order in the input is irrelevant; emitted sets are listed in point
// order, which makes emission canonical and byte-deterministic.

inline FinSpace::Data space_data_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("min_nbhd"))
    throw JsonFormatError(
        "space document needs \"points\" and \"min_nbhd\" fields");
  const auto& points = j.at("points");
  const auto& nbhd = j.at("min_nbhd");
  if (!points.is_array() || !nbhd.is_object())
    throw JsonFormatError(
        "\"points\" must be an array and \"min_nbhd\" an object");

  FinSpace::Data data;
  for (const auto& p : points) {
    if (!p.is_string())
      throw JsonFormatError("point identifiers must be strings");
    data.points.push_back(p.get<std::string>());
  }
  for (const auto& [key, members] : nbhd.items()) {
    if (!members.is_array())
      throw JsonFormatError("min_nbhd values must be arrays of identifiers");
    std::vector<std::string> set;
    for (const auto& m : members) {
      if (!m.is_string())
        throw JsonFormatError("point identifiers must be strings");
      set.push_back(m.get<std::string>());
    }
    data.min_nbhd.emplace(key, std::move(set));
  }
  return data;
}

inline FinSpace space_from_json(const nlohmann::json& j) {
  return FinSpace::build(space_data_from_json(j));
}

inline nlohmann::json space_to_json(const FinSpace& space) {
  nlohmann::json j;
  j["points"] = space.labels();
  nlohmann::json nbhd = nlohmann::json::object();
  for (std::size_t i = 0; i < space.size(); ++i)
    nbhd[space.label(i)] = space.to_labels(space.min_nbhd(i));
  j["min_nbhd"] = std::move(nbhd);
  return j;
}

inline nlohmann::json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open \"" + path + "\"");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError("while parsing \"" + path + "\": " + e.what());
  }
  return j;
}

inline FinSpace load_space(const std::string& path) {
  return space_from_json(parse_json_file(path));
}

// Map document: {"domain": <path or inline space>, "codomain": <same>,
// "values": {"a": "x", ...}}. Relative space paths resolve against the
// directory of the map file.
inline SpaceMap map_from_json(const nlohmann::json& j,
                              const std::string& base_dir = ".") {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
      !j.contains("values"))
    throw JsonFormatError(
        "map document needs \"domain\", \"codomain\" and \"values\" fields");

  auto load_side = [&](const nlohmann::json& side) {
    if (side.is_string()) {
      std::filesystem::path p(side.get<std::string>());
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      return load_space(p.string());
    }
    return space_from_json(side);
  };
  FinSpace domain = load_side(j.at("domain"));
  FinSpace codomain = load_side(j.at("codomain"));

  const auto& values = j.at("values");
  if (!values.is_object())
    throw JsonFormatError("\"values\" must map domain points to codomain points");
  std::map<std::string, std::string> assignment;
  for (const auto& [from, to] : values.items()) {
    if (!to.is_string())
      throw JsonFormatError("map values must be point identifiers");
    assignment.emplace(from, to.get<std::string>());
  }
  return SpaceMap::from_labels(std::move(domain), std::move(codomain),
                               assignment);
}

inline SpaceMap load_map(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return map_from_json(parse_json_file(path),
                       dir.empty() ? "." : dir.string());
}

inline nlohmann::json map_values_to_json(const SpaceMap& f) {
  nlohmann::json values = nlohmann::json::object();
  for (std::size_t x = 0; x < f.domain().size(); ++x)
    values[f.domain().label(x)] = f.codomain().label(f.value(x));
  return values;
}

}  // namespace fintopo

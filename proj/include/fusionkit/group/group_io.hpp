#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "fusionkit/error.hpp"
#include "fusionkit/group/catalog.hpp"

namespace fusionkit::group {

/// Reads {"degree": n, "generators": [...]}; each generator is either a
/// 0-based image array or a cycle-notation string.
inline GroupSpec group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators")) {
    throw ParseError("group file needs \"degree\" and \"generators\"");
  }
  if (!j["degree"].is_number_integer() || j["degree"].get<int>() < 1) throw ParseError("degree must be a positive integer");
  if (!j["generators"].is_array()) throw ParseError("generators must be an array");
  GroupSpec out;
  out.degree = j["degree"].get<int>();
  for (const auto& g : j["generators"]) {
    if (g.is_string()) {
      out.generators.push_back(Permutation::from_cycles(g.get<std::string>(), out.degree));
    } else if (g.is_array()) {
      std::vector<int> images;
      for (const auto& v : g) {
        if (!v.is_number_integer()) throw ParseError("image arrays hold integers");
        images.push_back(v.get<int>());
      }
      if (static_cast<int>(images.size()) != out.degree) {
        throw DegreeMismatch("generator of length " + std::to_string(images.size()) + " in degree " +
                             std::to_string(out.degree));
      }
      out.generators.emplace_back(std::move(images));
    } else {
      throw ParseError("generator must be an image array or a cycle string");
    }
  }
  return out;
}

inline nlohmann::json group_to_json(const GroupSpec& spec) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : spec.generators) gens.push_back(g.images());
  return {{"degree", spec.degree}, {"generators", gens}};
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline GroupSpec load_group_file(const std::string& path) { return group_from_json(read_json_file(path)); }

}  // namespace fusionkit::group

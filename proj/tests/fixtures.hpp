#pragma once

#include <string>

#include "fusionkit/fusionkit.hpp"

namespace fixtures {

using fusionkit::fusion::FusionSystem;

inline FusionSystem system_of(const std::string& name, int p) {
  return fusionkit::fusion::from_group(fusionkit::group::catalog_group(name), p);
}

/// Order-4 non-cyclic subgroups of the base of F (Klein four groups).
inline std::vector<int> klein_fours(const FusionSystem& f) {
  const auto& l = f.lattice();
  std::vector<int> out;
  for (int q : f.objects()) {
    const auto& s = l.subgroup(q);
    if (s.order() != 4) continue;
    bool cyclic = false;
    for (int x : s.members()) cyclic = cyclic || l.table().element_order(x) == 4;
    if (!cyclic) out.push_back(q);
  }
  return out;
}

/// The dump of F_{D8}(S4) with every non-inner automorphism of the normal
/// Klein four group removed from each listing with that domain.
inline nlohmann::json surgery_mutant_dump(const FusionSystem& f) {
  namespace fu = fusionkit::fusion;
  const int v4 = fu::o_p(f);
  const auto inner = fu::aut_base(f, v4);
  nlohmann::json j = fu::to_json(f);
  nlohmann::json kept = nlohmann::json::array();
  for (const auto& m : j["morphisms"]) {
    if (m["domain"].get<int>() == v4 && !inner.count(m["images"].get<std::vector<int>>())) continue;
    kept.push_back(m);
  }
  j["morphisms"] = std::move(kept);
  return j;
}

}  // namespace fixtures

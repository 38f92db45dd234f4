#pragma once

#include <optional>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion/classification.hpp"
#include "fusionkit/fusion/local.hpp"
#include "fusionkit/fusion/system.hpp"

namespace fusionkit::classify {

struct Constrained {
  bool constrained = false;
  /// Largest normal F-centric subgroup.
  std::optional<int> witness;
};

/// F is constrained iff some normal subgroup is F-centric. Since overgroups
/// of centric subgroups are centric, that happens iff O_p(F) is centric;
/// both are computed and must agree.
inline Constrained is_constrained(const FusionSystem& f) {
  const SubgroupLattice& l = f.lattice();
  Constrained out;
  for (int q : f.objects()) {
    if (!fusion::is_normal_in(f, q) || !fusion::is_centric(f, q)) continue;
    if (!out.witness || l.subgroup(q).order() > l.subgroup(*out.witness).order()) out.witness = q;
  }
  out.constrained = out.witness.has_value();
  if (out.constrained != fusion::is_centric(f, fusion::o_p(f))) {
    throw InternalError("normal centric scan disagrees with O_p(F)");
  }
  return out;
}

}  // namespace fusionkit::classify

#pragma once

#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/fusion/local.hpp"
#include "fusionkit/fusion/system.hpp"
#include "fusionkit/group/subgroups.hpp"

namespace fusionkit::fusion {

struct QuotientSystem {
  FusionSystem system;
  /// Element of F's table -> element of the quotient's table (-1 off the base).
  std::vector<int> projection;

  /// Lattice index of R/Q in the quotient, for R containing Q.
  int image_of(const SubgroupLattice& source, int r) const {
    std::vector<int> image;
    for (int x : source.subgroup(r).members()) image.push_back(projection[x]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return system.lattice().find(image);
  }
};

namespace detail {

inline int image_of_dedup(const SubgroupLattice& target, const std::vector<int>& members,
                          const std::vector<int>& projection) {
  std::vector<int> image;
  for (int x : members) image.push_back(projection[x]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return target.find(image);
}

}  // namespace detail

/// F/Q for a strongly F-closed Q: objects are the subgroups of B/Q and the
/// morphisms are the maps induced by phi in Hom_F(R, S) with Q <= R, S.
inline QuotientSystem quotient_system(const FusionSystem& f, int q, const Bounds& bounds = {}) {
  const SubgroupLattice& l = f.lattice();
  if (!l.contains(f.base(), q) || !is_strongly_closed(f, q)) {
    throw NotStronglyClosed("quotient by a subgroup that is not strongly F-closed");
  }
  group::InducedTable bt = group::induced_table(l.table(), f.base_group(), bounds);
  std::vector<int> q_local;
  for (int x : l.subgroup(q).members()) q_local.push_back(bt.restriction[x]);
  group::Quotient quot = group::quotient_group(bt.table, group::from_members(bt.table, q_local), bounds);

  std::vector<int> projection(l.table().order(), -1);
  for (int x : f.base_group().members()) projection[x] = quot.projection[bt.restriction[x]];
  LatticePtr target = make_lattice(f.p(), std::move(quot.quotient), bounds);
  const SubgroupLattice& t = *target;

  std::vector<std::vector<Morphism>> isos(t.size());
  for (int r : f.objects()) {
    if (!l.contains(r, q)) continue;
    const auto& rm = l.subgroup(r).members();
    const int rq = detail::image_of_dedup(t, rm, projection);
    // One preimage per coset, aligned with the members of R/Q.
    std::vector<int> preimage(t.subgroup(rq).order(), -1);
    for (int x : rm) {
      int pos = t.position(rq, projection[x]);
      if (preimage[pos] < 0) preimage[pos] = x;
    }
    for (const auto& phi : f.isos(r)) {
      Morphism m{rq, 0, std::vector<int>(preimage.size())};
      for (std::size_t i = 0; i < preimage.size(); ++i) m.images[i] = projection[apply(l, phi, preimage[i])];
      m.codomain = image_index(t, m);
      isos[rq].push_back(std::move(m));
    }
  }
  return {FusionSystem(target, t.top(), std::move(isos)), std::move(projection)};
}

}  // namespace fusionkit::fusion

#pragma once

#include <map>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/fusion/classification.hpp"
#include "fusionkit/fusion/system.hpp"

namespace fusionkit::fusion {

/// One factor of an Alperin decomposition: restrict `alpha` (an element of
/// Aut_F(hub)) to the current image.
struct AlperinStep {
  int hub = 0;
  Morphism alpha;
};

/// Applies the steps left to right starting from id on `domain`.
inline Morphism recompose(const FusionSystem& f, int domain, const std::vector<AlperinStep>& steps) {
  const SubgroupLattice& l = f.lattice();
  Morphism current = identity_morphism(l, domain);
  for (const auto& s : steps) current = compose(l, restrict(l, s.alpha, current.codomain), current);
  return current;
}

/// Writes an F-isomorphism as a composite of restrictions of automorphisms
/// of P and of the given essential subgroups. Breadth-first over partial
/// composites, so inner morphisms come out as a single step through P.
inline std::vector<AlperinStep> alperin_decompose(const FusionSystem& f, const Morphism& phi,
                                                  const std::vector<int>& essentials) {
  const SubgroupLattice& l = f.lattice();
  const Morphism target = as_isomorphism(l, phi);
  if (!f.contains(target)) throw NoDecomposition("morphism is not in the fusion system");

  std::vector<int> hubs{f.base()};
  for (int e : essentials) {
    if (e != f.base()) hubs.push_back(e);
  }
  std::map<int, std::vector<Morphism>> autos;
  for (int h : hubs) autos[h] = f.automorphisms(h);

  struct Node {
    Morphism map;
    int parent;
    AlperinStep step;
  };
  std::vector<Node> nodes{{identity_morphism(l, target.domain), -1, {}}};
  std::map<std::vector<int>, int> seen{{nodes[0].map.images, 0}};
  auto path_to = [&](int i) {
    std::vector<AlperinStep> steps;
    for (; nodes[i].parent >= 0; i = nodes[i].parent) steps.push_back(nodes[i].step);
    return std::vector<AlperinStep>(steps.rbegin(), steps.rend());
  };
  if (nodes[0].map.images == target.images) return {{f.base(), identity_morphism(l, f.base())}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int x = nodes[i].map.codomain;
    for (int h : hubs) {
      if (!l.contains(h, x)) continue;
      for (const auto& alpha : autos[h]) {
        Morphism next = compose(l, restrict(l, alpha, x), nodes[i].map);
        if (seen.count(next.images)) continue;
        seen.emplace(next.images, static_cast<int>(nodes.size()));
        const bool done = next.images == target.images;
        nodes.push_back({std::move(next), static_cast<int>(i), {h, alpha}});
        if (done) return path_to(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  throw NoDecomposition("no decomposition through P and the essential subgroups");
}

inline std::vector<AlperinStep> alperin_decompose(const FusionSystem& f, const Morphism& phi,
                                                  const Bounds& bounds = {}) {
  return alperin_decompose(f, phi, classify_subgroups(f, bounds).essentials);
}

}  // namespace fusionkit::fusion

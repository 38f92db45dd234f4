#pragma once

#include <optional>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/fusion/local.hpp"
#include "fusionkit/fusion/quotient.hpp"
#include "fusionkit/fusion/system.hpp"

namespace fusionkit::fusion {

/// [Q, F] = <x^-1 phi(x) : x in Q, phi in Hom_F(<x>, P)>.
inline int focal_subgroup(const FusionSystem& f, int q) {
  const SubgroupLattice& l = f.lattice();
  const GroupTable& t = l.table();
  std::vector<bool> seen(t.order(), false);
  std::vector<int> gens;
  for (int x : l.subgroup(q).members()) {
    const int c = l.cyclic(x);
    const int pos = l.position(c, x);
    for (const auto& phi : f.isos(c)) {
      int y = t.mul(t.inv(x), phi.images[pos]);
      if (!seen[y]) {
        seen[y] = true;
        gens.push_back(y);
      }
    }
  }
  return l.find(group::generate(t, gens).members());
}

struct FocalSeries {
  int focal = 0;               // [Q, F; 1]
  std::vector<int> iterates;   // [Q, F; 0], [Q, F; 1], ... until stable
  int limit = 0;               // [Q, F; infinity]
};

inline FocalSeries focal_series(const FusionSystem& f, int q) {
  const SubgroupLattice& l = f.lattice();
  FocalSeries out;
  out.iterates.push_back(q);
  for (;;) {
    int next = focal_subgroup(f, out.iterates.back());
    if (next == out.iterates.back()) break;
    out.iterates.push_back(next);
  }
  out.focal = out.iterates.size() > 1 ? out.iterates[1] : out.iterates[0];
  out.limit = out.iterates.front();
  for (int s : out.iterates) out.limit = l.meet(out.limit, s);
  return out;
}

struct PLength {
  std::optional<int> length;
  std::vector<int> chain;  // P_0 = 1 < P_1 < ... in F's lattice
};

/// Greedy ascent P_i = preimage of O_p(F/P_{i-1}); absent when it stalls
/// below P.
inline PLength p_length(const FusionSystem& f, const Bounds& bounds = {}) {
  const SubgroupLattice& l = f.lattice();
  PLength out;
  out.chain.push_back(l.bottom());
  while (out.chain.back() != f.base()) {
    QuotientSystem qs = quotient_system(f, out.chain.back(), bounds);
    const Subgroup& top = qs.system.lattice().subgroup(o_p(qs.system));
    std::vector<int> preimage;
    for (int x : f.base_group().members()) {
      if (top.contains(qs.projection[x])) preimage.push_back(x);
    }
    const int next = l.find(preimage);
    if (next == out.chain.back()) return out;
    out.chain.push_back(next);
  }
  out.length = static_cast<int>(out.chain.size()) - 1;
  return out;
}

}  // namespace fusionkit::fusion

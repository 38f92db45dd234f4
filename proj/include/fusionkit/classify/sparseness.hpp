#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/classify/census.hpp"
#include "fusionkit/fusion/system.hpp"

namespace fusionkit::classify {

struct Sparseness {
  bool sparse = false;
  bool extremely_sparse = false;
  /// A nontrivial proper subsystem that breaks (extreme) sparseness.
  std::optional<FusionSystem> witness;
  /// Its base; equals F's base when it refutes plain sparseness.
  std::optional<int> witness_subgroup;
};

/// Default mode: quantifies over saturated subsystems.
inline Sparseness sparseness(const FusionSystem& f, const Bounds& bounds = {}) {
  Sparseness out;
  if (fusion::is_trivial(f)) return out;
  const SubgroupLattice& l = f.lattice();

  SubsystemCensus top = enumerate_subsystems(f, f.base(), bounds);
  for (const auto& e : top.found) {
    if (e != f && !fusion::is_trivial(e)) {
      out.witness = e;
      out.witness_subgroup = f.base();
      return out;
    }
  }
  out.sparse = true;
  // Census on Q depends only on F restricted to Q, so Q-conjugates repeat.
  std::vector<bool> covered(l.size(), false);
  for (int q : f.objects()) {
    if (q == f.base() || covered[q]) continue;
    for (int u : f.base_group().members()) covered[l.conjugate(q, u)] = true;
    SubsystemCensus c = enumerate_subsystems(f, q, bounds);
    for (const auto& e : c.found) {
      if (!fusion::is_trivial(e)) {
        out.witness = e;
        out.witness_subgroup = q;
        return out;
      }
    }
  }
  out.extremely_sparse = true;
  return out;
}

/// Strict mode: quantifies over every subsystem closed under composition,
/// restriction and inversion. Such a subsystem containing a non-inner
/// isomorphism phi contains generate({phi}), so F is strictly sparse iff
/// every non-inner isomorphism generates F.
inline Sparseness sparseness_strict(const FusionSystem& f) {
  Sparseness out;
  if (fusion::is_trivial(f)) return out;
  const SubgroupLattice& l = f.lattice();
  const FusionSystem inner = fusion::trivial_system(f);
  for (int q : f.objects()) {
    for (const auto& phi : f.isos(q)) {
      if (inner.contains(phi)) continue;
      FusionSystem e = fusion::generate(f, std::vector<Morphism>{phi});
      if (e != f) {
        out.witness = std::move(e);
        out.witness_subgroup = f.base();
        return out;
      }
    }
  }
  out.sparse = true;
  for (int q : f.objects()) {
    if (q == f.base()) continue;
    FusionSystem fq = fusion::restrict_to(f, q);
    if (!fusion::is_trivial(fq)) {
      for (int r : l.subgroups_of(q)) {
        for (const auto& phi : fq.isos(r)) {
          if (fusion::trivial_system(fq).contains(phi)) continue;
          out.witness = fusion::generate(fq, std::vector<Morphism>{phi});
          out.witness_subgroup = q;
          return out;
        }
      }
    }
  }
  out.extremely_sparse = true;
  return out;
}

}  // namespace fusionkit::classify

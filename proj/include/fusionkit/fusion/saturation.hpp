#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fusionkit/fusion/system.hpp"

namespace fusionkit::fusion {

struct Violation {
  std::string axiom;  // inclusion, inverse, inner, composition, restriction, sylow, extension
  int domain = -1;
  Morphism morphism;
  std::string detail;
};

struct SaturationReport {
  bool saturated = true;
  std::vector<Violation> violations;
};

/// Aut_B(Q) as a set of element maps, B the base of F.
inline std::set<std::vector<int>> aut_base(const FusionSystem& f, int q) {
  const SubgroupLattice& l = f.lattice();
  std::set<std::vector<int>> out;
  for (int u : l.subgroup(l.normalizer_in(q, f.base())).members()) out.insert(conjugation(l, q, u).images);
  return out;
}

/// N_phi: the u in N_B(Q) whose conjugation, transported along phi, lies
/// in Aut_B(phi(Q)).
inline int n_phi(const FusionSystem& f, const Morphism& phi) {
  const SubgroupLattice& l = f.lattice();
  const GroupTable& t = l.table();
  const int q = phi.domain;
  const int r = image_index(l, phi);
  const auto aut_r = aut_base(f, r);
  const auto& qm = l.subgroup(q).members();
  const auto& rm = l.subgroup(r).members();
  std::vector<int> phi_inv_pos(t.order(), -1);  // phi(x) -> position of x
  for (std::size_t i = 0; i < qm.size(); ++i) phi_inv_pos[phi.images[i]] = static_cast<int>(i);

  std::vector<int> members;
  for (int u : l.subgroup(l.normalizer_in(q, f.base())).members()) {
    std::vector<int> transported(rm.size());
    for (std::size_t j = 0; j < rm.size(); ++j) {
      int x = qm[phi_inv_pos[rm[j]]];
      transported[j] = apply(l, phi, t.conj(x, u));
    }
    if (aut_r.count(transported)) members.push_back(u);
  }
  return l.find(members);
}

/// Checks axioms (a)-(c), closure under composition and restriction, the
/// Sylow axiom and the extension axiom for every morphism with a fully
/// normalized image. Violations are returned, never thrown.
inline SaturationReport check_saturation(const FusionSystem& f) {
  const SubgroupLattice& l = f.lattice();
  SaturationReport out;
  auto flag = [&](std::string axiom, int domain, const Morphism& m, std::string detail) {
    out.saturated = false;
    out.violations.push_back({std::move(axiom), domain, m, std::move(detail)});
  };
  auto has = [&](const Morphism& m) { return f.contains(m); };

  for (int q : f.objects()) {
    Morphism id = identity_morphism(l, q);
    if (!has(id)) flag("inclusion", q, id, "identity of a subgroup missing");
    for (int u : f.base_group().members()) {
      Morphism c = conjugation(l, q, u);
      if (!has(c)) {
        flag("inner", q, c, "conjugation by a base element missing");
        break;
      }
    }
    for (const auto& m : f.isos(q)) {
      if (!has(inverse(l, m))) flag("inverse", q, m, "inverse of an induced isomorphism missing");
      for (const auto& n : f.isos(m.codomain)) {
        Morphism c = compose(l, n, m);
        if (!has(c)) {
          flag("composition", q, c, "composite missing");
          break;
        }
      }
      for (int s : l.subgroups_of(q)) {
        Morphism r = restrict(l, m, s);
        if (!has(r)) {
          flag("restriction", s, r, "restriction missing");
          break;
        }
      }
    }
  }

  const int base = f.base();
  const std::size_t aut_f = f.automorphisms(base).size();
  const std::size_t aut_p = aut_base(f, base).size();
  if (aut_f % aut_p != 0 || (aut_f / aut_p) % f.p() == 0) {
    flag("sylow", base, identity_morphism(l, base),
         "|Aut_F(P)| = " + std::to_string(aut_f) + ", |Aut_P(P)| = " + std::to_string(aut_p));
  }

  std::map<int, bool> fully_normalized;
  for (int q : f.objects()) {
    for (const auto& phi : f.isos(q)) {
      const int r = phi.codomain;
      auto it = fully_normalized.find(r);
      if (it == fully_normalized.end()) it = fully_normalized.emplace(r, is_fully_normalized(f, r)).first;
      if (!it->second) continue;
      const int n = n_phi(f, phi);
      bool extends = false;
      std::vector<int> pos;
      for (int x : l.subgroup(q).members()) pos.push_back(l.position(n, x));
      for (const auto& psi : f.isos(n)) {
        bool agrees = true;
        for (std::size_t i = 0; i < pos.size() && agrees; ++i) agrees = psi.images[pos[i]] == phi.images[i];
        if (agrees) {
          extends = true;
          break;
        }
      }
      if (!extends) flag("extension", q, phi, "no extension to N_phi of order " + std::to_string(l.subgroup(n).order()));
    }
  }
  return out;
}

}  // namespace fusionkit::fusion

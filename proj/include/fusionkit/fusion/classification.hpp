#pragma once

#include <map>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/fusion/local.hpp"
#include "fusionkit/fusion/saturation.hpp"
#include "fusionkit/fusion/system.hpp"
#include "fusionkit/group/structure.hpp"
#include "fusionkit/group/subgroups.hpp"

namespace fusionkit::fusion {

struct SubgroupStatus {
  int subgroup = 0;
  int f_class = 0;
  bool fully_normalized = false;
  bool fully_centralized = false;
  bool centric = false;
  bool essential = false;
  bool weakly_closed = false;
  bool strongly_closed = false;
  bool normal_in_f = false;
  bool central_in_f = false;
};

struct Classification {
  std::vector<SubgroupStatus> statuses;  // one per object, in object order
  int essential_rank = 0;
  std::vector<int> essentials;

  const SubgroupStatus& of(int q) const {
    for (const auto& s : statuses) {
      if (s.subgroup == q) return s;
    }
    throw NotASubgroup("subgroup is not an object of the system");
  }
};

/// Aut_F(Q) acting on the positions of Q's members.
inline GroupTable aut_f_table(const FusionSystem& f, int q, const Bounds& bounds = {}) {
  const SubgroupLattice& l = f.lattice();
  std::vector<group::Permutation> perms;
  for (const auto& m : f.automorphisms(q)) {
    std::vector<int> pos(m.images.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = l.position(q, m.images[i]);
    perms.emplace_back(std::move(pos));
  }
  return GroupTable::closure(perms, static_cast<int>(l.subgroup(q).order()), bounds.max_closure_order);
}

/// Out_F(Q) = Aut_F(Q)/Aut_Q(Q), realized by the coset action.
inline GroupTable out_f_table(const FusionSystem& f, int q, const Bounds& bounds = {}) {
  const SubgroupLattice& l = f.lattice();
  GroupTable aut = aut_f_table(f, q, bounds);
  std::vector<int> inner;
  for (int u : l.subgroup(q).members()) {
    Morphism c = conjugation(l, q, u);
    std::vector<int> pos(c.images.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = l.position(q, c.images[i]);
    int idx = aut.index_of(group::Permutation(std::move(pos)));
    if (idx < 0) throw InternalError("inner automorphism missing from Aut_F(Q)");
    inner.push_back(idx);
  }
  Subgroup inn = group::from_members(aut, inner);
  return group::quotient_group(aut, inn, bounds).quotient;
}

inline bool is_centric(const FusionSystem& f, int q) {
  const SubgroupLattice& l = f.lattice();
  for (int r : f_class_of(f, q)) {
    if (!l.contains(r, l.centralizer_in(r, f.base()))) return false;
  }
  return true;
}

inline bool is_essential(const FusionSystem& f, int q, const Bounds& bounds = {}) {
  if (!is_centric(f, q)) return false;
  GroupTable out = out_f_table(f, q, bounds);
  return group::strongly_p_embedded(out, f.p(), bounds).has_value();
}

/// F-classes, the per-subgroup flags and the essential rank.
inline Classification classify_subgroups(const FusionSystem& f, const Bounds& bounds = {}) {
  Classification c;
  std::map<int, int> class_of;  // subgroup -> class id
  int next = 0;
  std::vector<bool> class_has_essential;
  for (int q : f.objects()) {
    if (!class_of.count(q)) {
      for (int r : f_class_of(f, q)) class_of[r] = next;
      class_has_essential.push_back(false);
      ++next;
    }
    SubgroupStatus s;
    s.subgroup = q;
    s.f_class = class_of.at(q);
    s.fully_normalized = is_fully_normalized(f, q);
    s.fully_centralized = is_fully_centralized(f, q);
    s.centric = is_centric(f, q);
    s.essential = s.centric && is_essential(f, q, bounds);
    s.weakly_closed = is_weakly_closed(f, q);
    s.strongly_closed = is_strongly_closed(f, q);
    s.normal_in_f = is_normal_in(f, q);
    s.central_in_f = is_central_in(f, q);
    if (s.essential) {
      c.essentials.push_back(q);
      class_has_essential[s.f_class] = true;
    }
    c.statuses.push_back(s);
  }
  for (bool b : class_has_essential) c.essential_rank += b ? 1 : 0;
  return c;
}

inline int essential_rank(const FusionSystem& f, const Bounds& bounds = {}) {
  return classify_subgroups(f, bounds).essential_rank;
}

}  // namespace fusionkit::fusion

#pragma once

#include <set>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/fusion/classification.hpp"
#include "fusionkit/fusion/saturation.hpp"
#include "fusionkit/fusion/system.hpp"
#include "fusionkit/group/subgroups.hpp"

namespace fusionkit::classify {

using fusion::FusionSystem;
using fusion::Morphism;
using fusion::SubgroupLattice;
using group::GroupTable;

struct CensusStats {
  std::size_t branching_subgroups = 0;  // S with |Aut_F(S)| > |Aut_Q(S)|
  std::size_t assignments = 0;          // assignment vectors closed under generate()
  std::size_t distinct = 0;             // distinct closures
  std::size_t saturated = 0;
};

struct SubsystemCensus {
  FusionSystem base;
  int on_subgroup = 0;
  /// Saturated subsystems of `base` on `on_subgroup`, sorted.
  std::vector<FusionSystem> found;
  CensusStats stats;
};

namespace detail {

/// One branching subgroup S and the admissible choices of Aut(S): each
/// option is a generating set of some A with Aut_Q(S) <= A <= Aut_F(S).
struct Branch {
  int subgroup;
  std::vector<std::vector<Morphism>> options;
};

inline Morphism morphism_from_positions(const SubgroupLattice& l, int s, const group::Permutation& perm) {
  const auto& members = l.subgroup(s).members();
  Morphism m{s, s, std::vector<int>(members.size())};
  for (std::size_t i = 0; i < members.size(); ++i) m.images[i] = members[perm[static_cast<int>(i)]];
  return m;
}

inline Branch branch_options(const FusionSystem& fq, int s, const Bounds& bounds) {
  const SubgroupLattice& l = fq.lattice();
  GroupTable aut = fusion::aut_f_table(fq, s, bounds);
  std::vector<int> inner;
  for (const auto& images : fusion::aut_base(fq, s)) {
    std::vector<int> pos(images.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = l.position(s, images[i]);
    const int idx = aut.index_of(group::Permutation(std::move(pos)));
    if (idx < 0) throw InternalError("Aut_Q(S) is not inside Aut_F(S)");
    inner.push_back(idx);
  }
  group::SubgroupEnumeration e = group::enumerate_subgroups(aut, bounds);
  Branch b{s, {}};
  for (const auto& a : e.subgroups) {
    bool over = true;
    for (int x : inner) over = over && a.contains(x);
    if (!over) continue;
    std::vector<Morphism> gens;
    for (int g : a.generators()) gens.push_back(morphism_from_positions(l, s, aut.element(g)));
    b.options.push_back(std::move(gens));
  }
  return b;
}

}  // namespace detail

/// Every saturated subsystem of F on Q.
///
/// By Alperin's theorem a saturated E on Q is generated by Aut_E(Q) and
/// Aut_E(S) for E-essential S, and E-essential subgroups satisfy
/// C_Q(S) <= S. Up to Q-conjugacy those S are the candidates below, and
/// Aut_E(S) is one of the options; choosing all of them reproduces E.
inline SubsystemCensus enumerate_subsystems(const FusionSystem& f, int q, const Bounds& bounds = {}) {
  const SubgroupLattice& l = f.lattice();
  if (q < 0 || q >= l.size() || !l.contains(f.base(), q)) throw NotASubgroup("census on a subgroup outside the base");
  FusionSystem fq = fusion::restrict_to(f, q);
  SubsystemCensus census{f, q, {}, {}};

  std::vector<detail::Branch> branches;
  std::vector<bool> covered(l.size(), false);
  const auto& q_members = l.subgroup(q).members();
  for (int s : l.subgroups_of(q)) {
    if (covered[s]) continue;
    for (int u : q_members) covered[l.conjugate(s, u)] = true;
    if (s != q && !l.contains(s, l.centralizer_in(s, q))) continue;
    if (fq.automorphisms(s).size() <= fusion::aut_base(fq, s).size()) continue;
    branches.push_back(detail::branch_options(fq, s, bounds));
  }
  census.stats.branching_subgroups = branches.size();

  std::size_t total = 1;
  for (const auto& b : branches) {
    total *= b.options.size();
    if (total > bounds.max_assignments) {
      throw SearchBoundExceeded("subsystem census needs more than " + std::to_string(bounds.max_assignments) +
                                " assignment vectors");
    }
  }

  std::set<FusionSystem> distinct;
  std::vector<std::size_t> choice(branches.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Morphism> seeds;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      const auto& opt = branches[i].options[choice[i]];
      seeds.insert(seeds.end(), opt.begin(), opt.end());
    }
    distinct.insert(fusion::generate(fq, seeds));
    for (std::size_t i = 0; i < branches.size(); ++i) {
      if (++choice[i] < branches[i].options.size()) break;
      choice[i] = 0;
    }
  }
  census.stats.assignments = total;
  census.stats.distinct = distinct.size();
  for (const auto& e : distinct) {
    if (fusion::check_saturation(e).saturated) census.found.push_back(e);
  }
  census.stats.saturated = census.found.size();
  return census;
}

}  // namespace fusionkit::classify

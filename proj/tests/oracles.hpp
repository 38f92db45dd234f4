#pragma once

// Independent reference computations used to cross-check the library.
// Each one works from definitions only and shares no search code with the
// routines it checks.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "fusionkit/fusionkit.hpp"

namespace oracle {

using fusionkit::group::GroupTable;
using fusionkit::group::Subgroup;
using fusionkit::fusion::FusionSystem;
using fusionkit::fusion::Morphism;

/// Every map Q -> R satisfying f(ab) = f(a)f(b), found by walking all
/// functions on Q's member list and discarding a partial map as soon as an
/// assigned pair breaks the law.
inline std::set<std::vector<int>> all_homomorphisms(const GroupTable& g, const Subgroup& q, const Subgroup& r) {
  const auto& qm = q.members();
  const auto& rm = r.members();
  std::set<std::vector<int>> out;
  std::vector<int> f(qm.size(), -1);
  std::vector<int> where(g.order(), -1);
  for (std::size_t i = 0; i < qm.size(); ++i) where[qm[i]] = static_cast<int>(i);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == qm.size()) {
      out.insert(f);
      return;
    }
    for (int y : rm) {
      f[i] = y;
      bool ok = true;
      for (std::size_t a = 0; a <= i && ok; ++a) {
        for (std::size_t b = 0; b <= i && ok; ++b) {
          const int ab = where[g.mul(qm[a], qm[b])];
          if (f[ab] >= 0 && static_cast<std::size_t>(ab) <= i) ok = f[ab] == g.mul(f[a], f[b]);
        }
      }
      if (ok) rec(i + 1);
    }
    f[i] = -1;
  };
  rec(0);
  return out;
}

/// All subgroups, by adjoining one element at a time to known subgroups and
/// closing under products with a naive fixpoint loop.
inline std::set<std::vector<int>> subgroups_by_closure(const GroupTable& g) {
  std::set<std::vector<int>> found;
  auto close = [&](std::vector<bool> in) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < g.order(); ++a) {
        if (!in[a]) continue;
        for (int b = 0; b < g.order(); ++b) {
          if (in[b] && !in[g.mul(a, b)]) {
            in[g.mul(a, b)] = true;
            grew = true;
          }
        }
      }
    }
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
      if (in[x]) members.push_back(x);
    }
    return members;
  };
  std::vector<std::vector<int>> frontier;
  std::vector<bool> base(g.order(), false);
  base[g.identity()] = true;
  frontier.push_back(close(base));
  found.insert(frontier.front());
  // Breadth-first: every subgroup is some subgroup joined with one element.
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (int x = 0; x < g.order(); ++x) {
      std::vector<bool> in(g.order(), false);
      for (int m : frontier[i]) in[m] = true;
      if (in[x]) continue;
      in[x] = true;
      auto s = close(in);
      if (found.insert(s).second) frontier.push_back(std::move(s));
    }
  }
  return found;
}

/// Saturated subsystems of F on Q by closing under single additions from
/// the trivial system.
inline std::vector<FusionSystem> subset_closure_census(const FusionSystem& f, int q) {
  namespace fu = fusionkit::fusion;
  FusionSystem fq = fu::restrict_to(f, q);
  std::set<FusionSystem> seen{fu::trivial_system(fq)};
  std::vector<FusionSystem> queue{fu::trivial_system(fq)};
  const std::vector<Morphism> everything = fu::all_isos(fq);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const FusionSystem e = queue[i];
    for (const auto& m : everything) {
      if (e.contains(m)) continue;
      std::vector<Morphism> seeds = fu::all_isos(e);
      seeds.push_back(m);
      FusionSystem next = fu::generate(fq, seeds);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<FusionSystem> out;
  for (const auto& e : seen) {
    if (fu::check_saturation(e).saturated) out.push_back(e);
  }
  return out;
}

/// P ∩ G' with P the Sylow subgroup from_group uses, as members of F's table.
inline std::vector<int> sylow_meet_derived(const GroupTable& g, int p) {
  namespace gr = fusionkit::group;
  const Subgroup s = gr::sylow(g, p);
  const gr::InducedTable local = gr::induced_table(g, s);
  std::vector<bool> in_derived(g.order(), false);
  // G' as the closure of all commutators.
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) comms.push_back(g.commutator(a, b));
  }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  const Subgroup derived = gr::generate(g, comms);
  for (int x : derived.members()) in_derived[x] = true;
  std::vector<int> out;
  for (int i = 0; i < local.table.order(); ++i) {
    if (in_derived[local.embedding[i]]) out.push_back(i);
  }
  return out;
}

}  // namespace oracle

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/group/catalog.hpp"
#include "fusionkit/group/group_table.hpp"
#include "fusionkit/group/homomorphisms.hpp"
#include "fusionkit/group/subgroups.hpp"

namespace fusionkit::group {

/// The largest normal p-subgroup, read off an enumeration (normal p-subgroups
/// generate a normal p-subgroup, so the largest one contains all others).
inline Subgroup largest_normal_p_subgroup(const GroupTable& g, const SubgroupEnumeration& e, int p) {
  Subgroup best = trivial_subgroup(g);
  for (std::size_t i = 0; i < e.subgroups.size(); ++i) {
    const auto& s = e.subgroups[i];
    if (e.normal[i] && is_p_group(s, p) && s.order() > best.order()) best = s;
  }
  return best;
}

/// A strongly p-embedded subgroup, found by scanning the subgroup list.
/// Absent for p-groups and for groups of order prime to p.
inline std::optional<Subgroup> strongly_p_embedded(const GroupTable& g, int p, const Bounds& bounds = {}) {
  const long long sylow_order = p_part(g.order(), p);
  if (sylow_order == 1 || sylow_order == g.order()) return std::nullopt;
  SubgroupEnumeration e = enumerate_subgroups(g, bounds);
  std::vector<const Subgroup*> sylows;
  for (const auto& s : e.subgroups) {
    if (static_cast<long long>(s.order()) == sylow_order) sylows.push_back(&s);
  }
  for (const auto& h : e.subgroups) {
    if (h.order() == static_cast<std::size_t>(g.order()) || p_part(static_cast<long long>(h.order()), p) != sylow_order) {
      continue;
    }
    const Subgroup* inside = nullptr;
    for (const Subgroup* s : sylows) {
      if (s->is_subgroup_of(h)) {
        inside = s;
        break;
      }
    }
    bool embedded = true;
    for (int x = 0; x < g.order() && embedded; ++x) {
      if (h.contains(x)) continue;
      for (int m : inside->members()) {
        int y = g.conj(m, x);
        if (y != g.identity() && h.contains(y)) {
          embedded = false;
          break;
        }
      }
    }
    if (embedded) return h;
  }
  return std::nullopt;
}

/// True iff no section K/L of P (L normal in K <= P) is isomorphic to H.
inline bool section_free(const GroupTable& g, const Subgroup& p_sub, const GroupTable& h, const Bounds& bounds = {}) {
  const std::size_t n = static_cast<std::size_t>(h.order());
  if (p_sub.order() < n || p_sub.order() % n != 0) return true;
  InducedTable local = induced_table(g, p_sub, bounds);
  const GroupTable& t = local.table;
  SubgroupEnumeration e = enumerate_subgroups(t, bounds);
  for (const auto& k : e.subgroups) {
    if (k.order() % n != 0) continue;
    const std::size_t l_order = k.order() / n;
    std::optional<InducedTable> k_table;
    for (const auto& l : e.subgroups) {
      if (l.order() != l_order || !is_normal_in(t, l, k)) continue;
      if (!k_table) k_table = induced_table(t, k, bounds);
      std::vector<int> l_members;
      for (int x : l.members()) l_members.push_back(k_table->restriction[x]);
      Subgroup l_local = from_members(k_table->table, std::move(l_members));
      Quotient quot = quotient_group(k_table->table, l_local, bounds);
      if (is_isomorphic(quot.quotient, h, bounds)) return false;
    }
  }
  return true;
}

inline long long int_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Y_1 = C_p wr C_p; for m > 1 the pull-back of the top projection
/// C_p wr C_p -> C_p and the reduction C_{p^m} -> C_p, generated by
/// (base cycle, 1) and (block shift, generator of C_{p^m}).
inline GroupTable build_Y(int p, int m, const Bounds& bounds = {}) {
  if (!is_prime(p)) throw std::invalid_argument("build_Y: " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("build_Y: m must be positive");
  const long long order = int_pow(p, p + m);
  if (order > static_cast<long long>(bounds.max_closure_order)) {
    throw OrderBoundExceeded("Y_" + std::to_string(m) + " has order " + std::to_string(order) +
                             " beyond bound " + std::to_string(bounds.max_closure_order));
  }
  GroupSpec w = wreath_generators(p);
  if (m == 1) return w.build(bounds);
  const int cyc = static_cast<int>(int_pow(p, m));
  const int degree = w.degree + cyc;
  auto combine = [&](const Permutation& a, bool with_cycle) {
    std::vector<int> images(degree);
    for (int i = 0; i < w.degree; ++i) images[i] = a[i];
    for (int i = 0; i < cyc; ++i) images[w.degree + i] = w.degree + (with_cycle ? (i + 1) % cyc : i);
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens{combine(w.generators[0], false), combine(w.generators[1], true)};
  return GroupTable::closure(gens, degree, bounds.max_closure_order);
}

/// True iff P has no subgroup isomorphic to any Y_m. Only m with
/// p^(p+m) <= |P| can occur; the order of each Y_m is checked as built.
inline bool is_slim(const GroupTable& g, const Subgroup& p_sub, int p, const Bounds& bounds = {}) {
  if (!is_p_group(p_sub, p)) throw NotAPGroup("is_slim needs a p-group");
  std::optional<SubgroupEnumeration> e;
  std::optional<InducedTable> local;
  for (int m = 1; int_pow(p, p + m) <= static_cast<long long>(p_sub.order()); ++m) {
    GroupTable y = build_Y(p, m, bounds);
    if (y.order() != int_pow(p, p + m)) throw InternalError("Y_m order formula failed");
    if (!local) {
      local = induced_table(g, p_sub, bounds);
      e = enumerate_subgroups(local->table, bounds);
    }
    for (const auto& k : e->subgroups) {
      if (static_cast<int>(k.order()) != y.order()) continue;
      InducedTable kt = induced_table(local->table, k, bounds);
      if (is_isomorphic(kt.table, y, bounds)) return false;
    }
  }
  return true;
}

}  // namespace fusionkit::group

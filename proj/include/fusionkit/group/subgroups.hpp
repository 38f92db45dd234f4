#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/group/group_table.hpp"

namespace fusionkit::group {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Largest power of p dividing n.
inline long long p_part(long long n, int p) {
  long long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_p_power(long long n, int p) { return n >= 1 && p_part(n, p) == n; }

inline std::vector<int> prime_divisors(long long n) {
  std::vector<int> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

/// Every subgroup of a group, sorted by order then member set, with the
/// partition into conjugacy classes and normality flags.
struct SubgroupEnumeration {
  std::vector<Subgroup> subgroups;
  std::vector<int> conjugacy_class;  // class id per subgroup, ids in first-seen order
  std::vector<bool> normal;

  /// Index of the subgroup with the given sorted member list, or -1.
  int find(const std::vector<int>& members) const {
    auto it = index.find(members);
    return it == index.end() ? -1 : it->second;
  }

  std::map<std::vector<int>, int> index;
};

namespace detail {

inline int conjugate_index(const GroupTable& g, const SubgroupEnumeration& e, int i, int x) {
  std::vector<int> image;
  image.reserve(e.subgroups[i].order());
  for (int m : e.subgroups[i].members()) image.push_back(g.conj(m, x));
  std::sort(image.begin(), image.end());
  return e.find(image);
}

}  // namespace detail

/// All subgroups by cyclic extension: start from the cyclic subgroups, then
/// repeatedly adjoin one element and deduplicate by member set. A subgroup is
/// reached iff it is generated by some subset of the group.
inline SubgroupEnumeration enumerate_subgroups(const GroupTable& g, const Bounds& bounds = {}) {
  if (static_cast<std::size_t>(g.order()) > bounds.max_enumeration_order) {
    throw OrderBoundExceeded("subgroup enumeration on a group of order " + std::to_string(g.order()) +
                             " exceeds bound " + std::to_string(bounds.max_enumeration_order));
  }
  std::map<std::vector<int>, Subgroup> found;
  std::vector<const Subgroup*> frontier;
  auto insert = [&](Subgroup s) -> const Subgroup* {
    auto [it, fresh] = found.try_emplace(s.members(), std::move(s));
    return fresh ? &it->second : nullptr;
  };
  for (int x = 0; x < g.order(); ++x) {
    if (auto* s = insert(generate(g, {x}))) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<const Subgroup*> next;
    for (const Subgroup* h : frontier) {
      // <H, x> only depends on the coset Hx.
      std::vector<bool> done(g.order(), false);
      for (int x = 0; x < g.order(); ++x) {
        if (done[x] || h->contains(x)) continue;
        for (int m : h->members()) done[g.mul(m, x)] = true;
        if (auto* s = insert(extend(g, *h, x))) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }

  SubgroupEnumeration e;
  for (auto& [key, s] : found) e.subgroups.push_back(std::move(s));
  std::sort(e.subgroups.begin(), e.subgroups.end());
  for (std::size_t i = 0; i < e.subgroups.size(); ++i) e.index.emplace(e.subgroups[i].members(), static_cast<int>(i));

  const int n = static_cast<int>(e.subgroups.size());
  e.conjugacy_class.assign(n, -1);
  e.normal.assign(n, false);
  int next_class = 0;
  for (int i = 0; i < n; ++i) {
    if (e.conjugacy_class[i] >= 0) continue;
    std::vector<int> orbit{i};
    e.conjugacy_class[i] = next_class;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (int s : g.generators()) {
        int j = detail::conjugate_index(g, e, orbit[k], s);
        if (e.conjugacy_class[j] < 0) {
          e.conjugacy_class[j] = next_class;
          orbit.push_back(j);
        }
      }
    }
    if (orbit.size() == 1) e.normal[i] = true;
    ++next_class;
  }
  return e;
}

inline bool normalizes(const GroupTable& g, const Subgroup& q, int x) {
  return std::all_of(q.generators().begin(), q.generators().end(),
                     [&](int s) { return q.contains(g.conj(s, x)); });
}

inline bool is_normal(const GroupTable& g, const Subgroup& n) {
  return std::all_of(g.generators().begin(), g.generators().end(), [&](int x) { return normalizes(g, n, x); });
}

inline bool is_normal_in(const GroupTable& g, const Subgroup& n, const Subgroup& k) {
  return n.is_subgroup_of(k) &&
         std::all_of(k.members().begin(), k.members().end(), [&](int x) { return normalizes(g, n, x); });
}

struct LocalData {
  Subgroup normalizer;
  Subgroup centralizer;
  Subgroup center_of_q;
};

/// N_G(Q), C_G(Q) and Z(Q) by exhaustive scan over G.
inline LocalData local_data(const GroupTable& g, const Subgroup& q) {
  require_subgroup(g, q);
  std::vector<int> norm;
  std::vector<int> cent;
  for (int x = 0; x < g.order(); ++x) {
    if (normalizes(g, q, x)) norm.push_back(x);
    bool commutes = std::all_of(q.generators().begin(), q.generators().end(),
                                [&](int s) { return g.mul(s, x) == g.mul(x, s); });
    if (commutes) cent.push_back(x);
  }
  auto n_gens = greedy_generators(g, norm);
  auto c_gens = greedy_generators(g, cent);
  Subgroup normalizer(std::move(norm), std::move(n_gens), g.order());
  Subgroup centralizer(std::move(cent), std::move(c_gens), g.order());
  Subgroup center = intersection(g, q, centralizer);
  return {std::move(normalizer), std::move(centralizer), std::move(center)};
}

inline Subgroup center(const GroupTable& g, const Subgroup& s) {
  std::vector<int> members;
  for (int x : s.members()) {
    bool central = std::all_of(s.generators().begin(), s.generators().end(),
                               [&](int y) { return g.mul(x, y) == g.mul(y, x); });
    if (central) members.push_back(x);
  }
  auto gens = greedy_generators(g, members);
  return Subgroup(std::move(members), std::move(gens), g.order());
}

inline bool is_abelian(const GroupTable& g, const Subgroup& s) {
  for (int a : s.generators()) {
    for (int b : s.generators()) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

inline bool is_p_group(const Subgroup& s, int p) { return is_p_power(static_cast<long long>(s.order()), p); }

/// Subgroup generated by all commutators of elements of `s`.
inline Subgroup derived_subgroup(const GroupTable& g, const Subgroup& s) {
  std::vector<int> comms;
  std::vector<bool> seen(g.order(), false);
  for (int a : s.members()) {
    for (int b : s.members()) {
      int c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  auto gens = greedy_generators(g, comms);
  return generate(g, gens);
}

struct CharacteristicSubgroups {
  Subgroup derived;
  Subgroup frattini;
  Subgroup thompson;
};

/// P', Phi(P) and J(P) of a p-group given as a subgroup of `g`.
///
/// Phi(P) is computed twice, as the intersection of the maximal subgroups and
/// as the smallest normal subgroup with elementary abelian quotient; a
/// disagreement raises InternalError.
inline CharacteristicSubgroups characteristic_subgroups(const GroupTable& g, const Subgroup& p_sub, int p,
                                                        const Bounds& bounds = {}) {
  if (!is_p_group(p_sub, p)) {
    throw NotAPGroup("subgroup of order " + std::to_string(p_sub.order()) + " is not a " +
                     std::to_string(p) + "-group");
  }
  InducedTable local = induced_table(g, p_sub, bounds);
  const GroupTable& t = local.table;
  SubgroupEnumeration e = enumerate_subgroups(t, bounds);
  const Subgroup top = whole_group(t);

  auto lift = [&](const Subgroup& s) {
    std::vector<int> members;
    for (int x : s.members()) members.push_back(local.embedding[x]);
    return from_members(g, std::move(members));
  };

  Subgroup derived = derived_subgroup(t, top);

  // Intersection of maximal subgroups (index p in a p-group).
  std::vector<bool> in_all(t.order(), true);
  bool any_maximal = false;
  for (const auto& s : e.subgroups) {
    if (s.order() * p != top.order()) continue;
    any_maximal = true;
    for (int x = 0; x < t.order(); ++x) {
      if (!s.contains(x)) in_all[x] = false;
    }
  }
  std::vector<int> frattini_members;
  for (int x = 0; x < t.order(); ++x) {
    if (!any_maximal || in_all[x]) frattini_members.push_back(x);
  }
  if (!any_maximal) frattini_members = {t.identity()};

  // Smallest normal subgroup with elementary abelian quotient: intersect all
  // normal N containing P' and every p-th power.
  std::vector<bool> in_min(t.order(), true);
  for (std::size_t i = 0; i < e.subgroups.size(); ++i) {
    const auto& n = e.subgroups[i];
    if (!e.normal[i] || !derived.is_subgroup_of(n)) continue;
    bool powers = true;
    for (int x = 0; x < t.order() && powers; ++x) powers = n.contains(t.power(x, p));
    if (!powers) continue;
    for (int x = 0; x < t.order(); ++x) {
      if (!n.contains(x)) in_min[x] = false;
    }
  }
  std::vector<int> min_members;
  for (int x = 0; x < t.order(); ++x) {
    if (in_min[x]) min_members.push_back(x);
  }
  if (min_members != frattini_members) {
    throw InternalError("Frattini subgroup computations disagree");
  }

  std::size_t best = 0;
  for (const auto& s : e.subgroups) {
    if (is_abelian(t, s)) best = std::max(best, s.order());
  }
  std::vector<int> thompson_gens;
  for (const auto& s : e.subgroups) {
    if (s.order() == best && is_abelian(t, s)) {
      thompson_gens.insert(thompson_gens.end(), s.generators().begin(), s.generators().end());
    }
  }
  Subgroup thompson = generate(t, thompson_gens);

  return {lift(derived), lift(from_members(t, frattini_members)), lift(thompson)};
}

/// A Sylow p-subgroup, found by climbing: while |H| is below the p-part of
/// |G|, adjoin the first element of N_G(H) whose coset has order p.
inline Subgroup sylow(const GroupTable& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow: " + std::to_string(p) + " is not prime");
  const long long target = p_part(g.order(), p);
  Subgroup h = trivial_subgroup(g);
  while (static_cast<long long>(h.order()) < target) {
    int pick = -1;
    for (int x = 0; x < g.order() && pick < 0; ++x) {
      if (h.contains(x) || !normalizes(g, h, x)) continue;
      if (h.contains(g.power(x, p))) pick = x;
    }
    if (pick < 0) throw InternalError("Sylow climbing stalled");
    h = extend(g, h, pick);
  }
  return h;
}

struct Quotient {
  GroupTable quotient;
  std::vector<int> projection;  // element of G -> element of G/N
};

/// G/N realized as the action of G on the right cosets of N.
inline Quotient quotient_group(const GroupTable& g, const Subgroup& n, const Bounds& bounds = {}) {
  require_subgroup(g, n);
  if (!is_normal(g, n)) throw NotNormal("quotient by a subgroup that is not normal");
  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    for (int m : n.members()) coset[g.mul(m, x)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  const int k = static_cast<int>(reps.size());
  auto action = [&](int x) {
    std::vector<int> images(k);
    for (int c = 0; c < k; ++c) images[c] = coset[g.mul(reps[c], x)];
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (int s : g.generators()) gens.push_back(action(s));
  Quotient out{GroupTable::closure(gens, k, bounds.max_closure_order), {}};
  out.projection.resize(g.order());
  for (int x = 0; x < g.order(); ++x) out.projection[x] = out.quotient.index_of(action(x));
  return out;
}

}  // namespace fusionkit::group

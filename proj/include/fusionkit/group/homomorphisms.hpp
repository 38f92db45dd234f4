#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/group/group_table.hpp"

namespace fusionkit::group {

/// A homomorphism between two subgroups, stored as an explicit element map.
/// `images[i]` is the image of `domain.members()[i]`.
struct GroupMap {
  Subgroup domain;
  Subgroup codomain;
  std::vector<int> images;
  bool injective = false;

  int operator()(int x) const {
    const auto& m = domain.members();
    auto it = std::lower_bound(m.begin(), m.end(), x);
    if (it == m.end() || *it != x) throw NotASubgroup("element outside the domain");
    return images[static_cast<std::size_t>(it - m.begin())];
  }
};

/// Histogram of element orders, a cheap isomorphism invariant.
inline std::map<int, int> order_profile(const GroupTable& g, const Subgroup& s) {
  std::map<int, int> out;
  for (int x : s.members()) ++out[g.element_order(x)];
  return out;
}

namespace detail {

/// Generators chosen greedily, elements of large order first.
inline std::vector<int> search_generators(const GroupTable& g, const Subgroup& q) {
  std::vector<int> members = q.members();
  std::stable_sort(members.begin(), members.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  return greedy_generators(g, members);
}

/// Backtracking over generator images. `visit` receives the map as a vector
/// indexed by elements of `a` (-1 outside Q) and returns false to stop.
/// Each partial assignment is extended to <g_1..g_k> and every edge
/// m -> m*g_j is checked, so complete assignments are exactly the
/// homomorphisms.
template <class Visit>
bool hom_search(const GroupTable& a, const Subgroup& q, const GroupTable& b, const Subgroup& r, bool injective,
                Visit&& visit) {
  const std::vector<int> gens = search_generators(a, q);
  std::vector<int> f(a.order(), -1);
  std::vector<int> members{a.identity()};
  f[a.identity()] = b.identity();

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == gens.size()) return visit(static_cast<const std::vector<int>&>(f));
    const int s = gens[k];
    for (int t : r.members()) {
      if (injective ? b.element_order(t) != a.element_order(s) : a.element_order(s) % b.element_order(t) != 0) {
        continue;
      }
      std::vector<int> saved_f = f;
      std::size_t saved_size = members.size();
      f[s] = t;
      bool ok = true;
      std::vector<int> list = members;
      if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
      for (std::size_t i = 0; i < list.size() && ok; ++i) {
        const int m = list[i];
        for (std::size_t j = 0; j <= k && ok; ++j) {
          const int y = a.mul(m, gens[j]);
          const int fy = b.mul(f[m], f[gens[j]]);
          if (f[y] < 0) {
            f[y] = fy;
            list.push_back(y);
          } else if (f[y] != fy) {
            ok = false;
          }
        }
      }
      if (ok && injective) {
        for (int m : list) {
          if (m != a.identity() && f[m] == b.identity()) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        members = std::move(list);
        if (!rec(k + 1)) return false;
      }
      f = std::move(saved_f);
      members.resize(saved_size);
    }
    return true;
  };
  return rec(0);
}

inline void check_domain(const Subgroup& q, const Bounds& bounds) {
  if (q.order() > bounds.max_hom_domain) {
    throw SearchBoundExceeded("homomorphism search on a domain of order " + std::to_string(q.order()) +
                              " exceeds bound " + std::to_string(bounds.max_hom_domain));
  }
}

}  // namespace detail

/// All homomorphisms Q -> R (both subgroups of `g`), optionally only the
/// injective ones, in generator-image search order.
inline std::vector<GroupMap> homomorphisms(const GroupTable& g, const Subgroup& q, const Subgroup& r,
                                           bool injective_only, const Bounds& bounds = {}) {
  require_subgroup(g, q);
  require_subgroup(g, r);
  detail::check_domain(q, bounds);
  std::vector<GroupMap> out;
  if (injective_only && q.order() > r.order()) return out;
  detail::hom_search(g, q, g, r, injective_only, [&](const std::vector<int>& f) {
    GroupMap m{q, r, {}, injective_only};
    m.images.reserve(q.order());
    for (int x : q.members()) m.images.push_back(f[x]);
    if (!injective_only) {
      std::vector<int> sorted = m.images;
      std::sort(sorted.begin(), sorted.end());
      m.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    out.push_back(std::move(m));
    return true;
  });
  return out;
}

/// Aut(Q) acting on the positions of Q's sorted member list.
inline GroupTable automorphism_group(const GroupTable& g, const Subgroup& q, const Bounds& bounds = {}) {
  auto autos = homomorphisms(g, q, q, true, bounds);
  std::vector<Permutation> perms;
  const auto& members = q.members();
  for (const auto& m : autos) {
    std::vector<int> images(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      images[i] = static_cast<int>(std::lower_bound(members.begin(), members.end(), m.images[i]) - members.begin());
    }
    perms.emplace_back(std::move(images));
  }
  return GroupTable::closure(perms, static_cast<int>(members.size()), bounds.max_closure_order);
}

/// Isomorphism test by order profile followed by an injective search. The
/// search is bounded by the enumeration bound rather than the homomorphism
/// bound since only one witness is needed.
inline bool is_isomorphic(const GroupTable& a, const GroupTable& b, const Bounds& bounds = {}) {
  if (a.order() != b.order()) return false;
  if (static_cast<std::size_t>(a.order()) > bounds.max_enumeration_order) {
    throw SearchBoundExceeded("isomorphism test on groups of order " + std::to_string(a.order()));
  }
  const Subgroup wa = whole_group(a);
  const Subgroup wb = whole_group(b);
  if (order_profile(a, wa) != order_profile(b, wb)) return false;
  bool found = false;
  detail::hom_search(a, wa, b, wb, true, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace fusionkit::group

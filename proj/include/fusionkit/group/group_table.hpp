#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/group/permutation.hpp"

namespace fusionkit::group {

/// A finite permutation group with every element materialized.
///
/// Elements are addressed by index. Index 0 is always the identity. When the
/// group is small enough the full Cayley table is cached, otherwise products
/// are computed by composing permutations and looking the result up.
class GroupTable {
 public:
  static constexpr std::size_t kCayleyLimit = 2048;

  /// The trivial group on one point.
  GroupTable() : GroupTable(closure({}, 1)) {}

  /// Breadth-first closure from the identity; generators are tried in input
  /// order, which fixes the element numbering.
  static GroupTable closure(std::span<const Permutation> generators, int degree,
                            std::size_t bound = Bounds{}.max_closure_order) {
    for (const auto& g : generators) {
      if (g.degree() != degree) {
        throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                             " in a group of degree " + std::to_string(degree));
      }
    }
    GroupTable t{Blank{}};
    t.degree_ = degree;
    t.add(Permutation::identity(degree));
    for (std::size_t i = 0; i < t.elements_.size(); ++i) {
      for (const auto& g : generators) {
        Permutation y = t.elements_[i] * g;
        if (t.index_.count(y)) continue;
        if (t.elements_.size() >= bound) {
          throw OrderBoundExceeded("group closure exceeds order bound " + std::to_string(bound));
        }
        t.add(std::move(y));
      }
    }
    for (const auto& g : generators) t.generators_.push_back(t.index_.at(g));
    t.finish();
    return t;
  }

  /// Adopts an explicit element list, keeping its numbering. The list must
  /// start with the identity and be closed under composition.
  static GroupTable from_elements(std::vector<Permutation> elements, std::vector<int> generators) {
    if (elements.empty() || !elements.front().is_identity()) {
      throw FormatError("element list must start with the identity");
    }
    GroupTable t{Blank{}};
    t.degree_ = elements.front().degree();
    for (auto& e : elements) {
      if (e.degree() != t.degree_) throw DegreeMismatch("element list mixes degrees");
      if (t.index_.count(e)) throw FormatError("element list contains duplicates");
      t.add(std::move(e));
    }
    for (int g : generators) {
      if (g < 0 || g >= t.order()) throw FormatError("generator index out of range");
    }
    t.generators_ = std::move(generators);
    for (int a = 0; a < t.order(); ++a) {
      for (int b = 0; b < t.order(); ++b) {
        if (!t.index_.count(t.elements_[a] * t.elements_[b])) {
          throw FormatError("element list is not closed under composition");
        }
      }
    }
    t.finish();
    return t;
  }

  int order() const { return static_cast<int>(elements_.size()); }
  int degree() const { return degree_; }
  int identity() const { return 0; }
  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<int>& generators() const { return generators_; }

  /// Index of a permutation, or -1 when it is not an element.
  int index_of(const Permutation& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }

  /// Product "a then b".
  int mul(int a, int b) const {
    if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * elements_.size() + b];
    return index_.at(elements_[a] * elements_[b]);
  }
  int inv(int a) const { return inverse_[a]; }
  /// x^g = g^-1 x g.
  int conj(int x, int g) const { return mul(mul(inverse_[g], x), g); }
  /// [x, y] = x^-1 y^-1 x y.
  int commutator(int x, int y) const { return mul(mul(inverse_[x], inverse_[y]), mul(x, y)); }
  int power(int x, long long n) const {
    int r = identity();
    for (long long i = 0; i < n; ++i) r = mul(r, x);
    return r;
  }
  int element_order(int x) const { return orders_[x]; }

 private:
  struct Blank {};
  explicit GroupTable(Blank) {}

  void add(Permutation p) {
    index_.emplace(p, static_cast<int>(elements_.size()));
    elements_.push_back(std::move(p));
  }

  void finish() {
    const std::size_t n = elements_.size();
    inverse_.resize(n);
    for (std::size_t i = 0; i < n; ++i) inverse_[i] = index_.at(elements_[i].inverse());
    if (n <= kCayleyLimit) {
      cayley_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) cayley_[a * n + b] = index_.at(elements_[a] * elements_[b]);
      }
    }
    orders_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      int k = 1;
      int y = static_cast<int>(i);
      while (y != 0) {
        y = mul(y, static_cast<int>(i));
        ++k;
      }
      orders_[i] = k;
    }
  }

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<int> orders_;
  std::vector<int> cayley_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
};

/// A subgroup of some GroupTable, held as a sorted element-index set.
///
/// The ambient table is not stored; every operation takes it explicitly.
/// Subgroups compare by order first, then lexicographically by member set.
class Subgroup {
 public:
  Subgroup() = default;

  /// `members` must be sorted and closed; use generate() or from_members()
  /// to construct validated subgroups.
  Subgroup(std::vector<int> members, std::vector<int> generators, int ambient_order)
      : members_(std::move(members)), generators_(std::move(generators)), mask_(ambient_order, false) {
    for (int m : members_) mask_[m] = true;
  }

  std::size_t order() const { return members_.size(); }
  const std::vector<int>& members() const { return members_; }
  const std::vector<int>& generators() const { return generators_; }
  bool contains(int x) const { return x >= 0 && static_cast<std::size_t>(x) < mask_.size() && mask_[x]; }
  bool is_subgroup_of(const Subgroup& other) const {
    if (order() > other.order()) return false;
    return std::all_of(members_.begin(), members_.end(), [&](int m) { return other.contains(m); });
  }
  int ambient_order() const { return static_cast<int>(mask_.size()); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<int> members_;
  std::vector<int> generators_;
  std::vector<bool> mask_;
};

/// The subgroup generated by the given element indices.
inline Subgroup generate(const GroupTable& g, std::span<const int> generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : generators) {
      int y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(std::move(members), std::vector<int>(generators.begin(), generators.end()), g.order());
}

inline Subgroup generate(const GroupTable& g, std::initializer_list<int> generators) {
  return generate(g, std::span<const int>(generators.begin(), generators.size()));
}

/// <H, x> computed by extending H's member list.
inline Subgroup extend(const GroupTable& g, const Subgroup& h, int x) {
  std::vector<int> gens = h.generators();
  gens.push_back(x);
  std::vector<bool> in(g.order(), false);
  std::vector<int> members = h.members();
  for (int m : members) in[m] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      int y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(std::move(members), std::move(gens), g.order());
}

/// A generating set picked greedily from the member list.
inline std::vector<int> greedy_generators(const GroupTable& g, std::span<const int> members) {
  std::vector<int> gens;
  Subgroup span = generate(g, std::span<const int>{});
  for (int m : members) {
    if (span.contains(m)) continue;
    span = extend(g, span, m);
    gens.push_back(m);
  }
  return gens;
}

/// Validates a member set and wraps it as a Subgroup.
inline Subgroup from_members(const GroupTable& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<bool> in(g.order(), false);
  for (int m : members) {
    if (m < 0 || m >= g.order()) throw NotASubgroup("element index out of range");
    in[m] = true;
  }
  if (members.empty() || !in[g.identity()]) throw NotASubgroup("member set lacks the identity");
  for (int a : members) {
    if (!in[g.inv(a)]) throw NotASubgroup("member set not closed under inversion");
    for (int b : members) {
      if (!in[g.mul(a, b)]) throw NotASubgroup("member set not closed under multiplication");
    }
  }
  auto gens = greedy_generators(g, members);
  return Subgroup(std::move(members), std::move(gens), g.order());
}

inline Subgroup whole_group(const GroupTable& g) {
  std::vector<int> members(g.order());
  std::iota(members.begin(), members.end(), 0);
  return Subgroup(std::move(members), g.generators(), g.order());
}

inline Subgroup trivial_subgroup(const GroupTable& g) { return Subgroup({g.identity()}, {}, g.order()); }

/// Throws NotASubgroup unless `s` is a closed subset of `g`.
inline void require_subgroup(const GroupTable& g, const Subgroup& s) {
  if (s.ambient_order() != g.order()) throw NotASubgroup("subgroup belongs to a different group");
  (void)from_members(g, s.members());
}

inline Subgroup intersection(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> members;
  for (int m : a.members()) {
    if (b.contains(m)) members.push_back(m);
  }
  auto gens = greedy_generators(g, members);
  return Subgroup(std::move(members), std::move(gens), g.order());
}

/// A subgroup materialized as a group in its own right.
struct InducedTable {
  GroupTable table;
  std::vector<int> embedding;  // table index -> ambient index
  std::vector<int> restriction;  // ambient index -> table index, -1 outside
};

inline InducedTable induced_table(const GroupTable& g, const Subgroup& s, const Bounds& bounds = {}) {
  std::vector<Permutation> gens;
  for (int x : s.generators()) gens.push_back(g.element(x));
  InducedTable out{GroupTable::closure(gens, g.degree(), bounds.max_closure_order), {}, {}};
  out.embedding.resize(out.table.order());
  out.restriction.assign(g.order(), -1);
  for (int i = 0; i < out.table.order(); ++i) {
    int a = g.index_of(out.table.element(i));
    out.embedding[i] = a;
    out.restriction[a] = i;
  }
  return out;
}

}  // namespace fusionkit::group

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/group/group_table.hpp"
#include "fusionkit/group/subgroups.hpp"

namespace fusionkit::fusion {

using group::GroupTable;
using group::Subgroup;

/// The subgroup lattice of a p-group P, with the conjugation and
/// containment data every fusion-system operation reads.
///
/// Subgroups are addressed by their index in the sorted enumeration. All
/// fusion systems on subgroups of the same P share one lattice.
class SubgroupLattice {
 public:
  SubgroupLattice(int p, GroupTable table, const Bounds& bounds = {}) : p_(p), table_(std::move(table)) {
    if (!group::is_p_power(table_.order(), p)) {
      throw NotAPGroup("group of order " + std::to_string(table_.order()) + " is not a " + std::to_string(p) +
                       "-group");
    }
    auto e = group::enumerate_subgroups(table_, bounds);
    subgroups_ = std::move(e.subgroups);
    index_ = std::move(e.index);
    const int n = size();
    const int order = table_.order();

    contains_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) {
        if (subgroups_[j].is_subgroup_of(subgroups_[i])) contains_[i][j] = true;
      }
    }
    subgroups_of_.resize(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (contains_[i][j]) subgroups_of_[i].push_back(j);
      }
    }

    conjugate_.assign(n, std::vector<int>(order, -1));
    for (int i = 0; i < n; ++i) {
      for (int u = 0; u < order; ++u) conjugate_[i][u] = image_index_of(subgroups_[i].members(), [&](int x) {
        return table_.conj(x, u);
      });
    }

    normalizer_.resize(n);
    centralizer_.resize(n);
    for (int i = 0; i < n; ++i) {
      auto data = group::local_data(table_, subgroups_[i]);
      normalizer_[i] = find(data.normalizer.members());
      centralizer_[i] = find(data.centralizer.members());
    }

    cyclic_.resize(order);
    for (int x = 0; x < order; ++x) cyclic_[x] = find(group::generate(table_, {x}).members());
  }

  int p() const { return p_; }
  const GroupTable& table() const { return table_; }
  int size() const { return static_cast<int>(subgroups_.size()); }
  const Subgroup& subgroup(int i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  int top() const { return size() - 1; }
  int bottom() const { return 0; }

  /// Index of the subgroup with the given member set, or -1.
  int find(const std::vector<int>& members) const {
    auto it = index_.find(members);
    return it == index_.end() ? -1 : it->second;
  }
  int find_unsorted(std::vector<int> members) const {
    std::sort(members.begin(), members.end());
    return find(members);
  }
  /// Index of the subgroup whose members are the images of `members` under f.
  template <class F>
  int image_index_of(const std::vector<int>& members, F&& f) const {
    std::vector<int> image;
    image.reserve(members.size());
    for (int x : members) image.push_back(f(x));
    return find_unsorted(std::move(image));
  }

  /// True iff subgroup j is contained in subgroup i.
  bool contains(int i, int j) const { return contains_[i][j]; }
  const std::vector<int>& subgroups_of(int i) const { return subgroups_of_[i]; }
  int conjugate(int i, int u) const { return conjugate_[i][u]; }
  /// N_P(Q) and C_P(Q) in the full group P.
  int normalizer(int i) const { return normalizer_[i]; }
  int centralizer(int i) const { return centralizer_[i]; }
  int cyclic(int x) const { return cyclic_[x]; }

  /// N_B(Q) = N_P(Q) meet B, and likewise for centralizers.
  int normalizer_in(int q, int b) const { return meet(normalizer_[q], b); }
  int centralizer_in(int q, int b) const { return meet(centralizer_[q], b); }

  int meet(int a, int b) const {
    if (contains_[a][b]) return b;
    if (contains_[b][a]) return a;
    return find(group::intersection(table_, subgroups_[a], subgroups_[b]).members());
  }
  int join(int a, int b) const {
    if (contains_[a][b]) return a;
    if (contains_[b][a]) return b;
    std::vector<int> gens = subgroups_[a].generators();
    gens.insert(gens.end(), subgroups_[b].generators().begin(), subgroups_[b].generators().end());
    return find(group::generate(table_, gens).members());
  }

  /// Position of x in the member list of subgroup i, or -1.
  int position(int i, int x) const {
    const auto& m = subgroups_[i].members();
    auto it = std::lower_bound(m.begin(), m.end(), x);
    return it != m.end() && *it == x ? static_cast<int>(it - m.begin()) : -1;
  }

 private:
  int p_;
  GroupTable table_;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<bool>> contains_;
  std::vector<std::vector<int>> subgroups_of_;
  std::vector<std::vector<int>> conjugate_;
  std::vector<int> normalizer_;
  std::vector<int> centralizer_;
  std::vector<int> cyclic_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

inline LatticePtr make_lattice(int p, GroupTable table, const Bounds& bounds = {}) {
  return std::make_shared<const SubgroupLattice>(p, std::move(table), bounds);
}

}  // namespace fusionkit::fusion

#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fusionkit/fusion/system.hpp"

namespace fusionkit {

/// DOT rendering of the subgroup lattice of the base of F.
///
/// Hasse edges are solid black. Subgroups conjugate in P are chained by
/// solid blue edges; F-fusion joining distinct P-classes is drawn dashed
/// red between class representatives.
inline std::string to_dot(const fusion::FusionSystem& f, const std::string& name = "fusion") {
  using fusion::SubgroupLattice;
  const SubgroupLattice& l = f.lattice();
  const auto& objects = f.objects();
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";

  std::map<std::size_t, std::vector<int>> by_order;
  for (int q : objects) by_order[l.subgroup(q).order()].push_back(q);
  for (const auto& [order, qs] : by_order) {
    out << "  { rank=same;";
    for (int q : qs) out << " s" << q << ";";
    out << " }\n";
  }
  for (int q : objects) out << "  s" << q << " [label=\"" << l.subgroup(q).order() << "\\n#" << q << "\"];\n";

  for (int big : objects) {
    for (int small : objects) {
      if (big == small || !l.contains(big, small)) continue;
      bool cover = true;
      for (int mid : objects) {
        if (mid != big && mid != small && l.contains(big, mid) && l.contains(mid, small)) {
          cover = false;
          break;
        }
      }
      if (cover) out << "  s" << small << " -- s" << big << ";\n";
    }
  }

  std::vector<int> p_class(l.size(), -1);
  std::vector<std::vector<int>> p_classes;
  for (int q : objects) {
    if (p_class[q] >= 0) continue;
    std::set<int> cls;
    for (int u : f.base_group().members()) cls.insert(l.conjugate(q, u));
    for (int r : cls) p_class[r] = static_cast<int>(p_classes.size());
    p_classes.emplace_back(cls.begin(), cls.end());
  }
  for (const auto& cls : p_classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      out << "  s" << cls[i - 1] << " -- s" << cls[i] << " [color=blue, constraint=false];\n";
    }
  }
  std::set<std::pair<int, int>> drawn;
  for (int q : objects) {
    for (int r : fusion::f_class_of(f, q)) {
      int a = p_classes[p_class[q]].front(), b = p_classes[p_class[r]].front();
      if (a == b || !drawn.insert({std::min(a, b), std::max(a, b)}).second) continue;
      out << "  s" << std::min(a, b) << " -- s" << std::max(a, b)
          << " [style=dashed, color=red, constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fusionkit

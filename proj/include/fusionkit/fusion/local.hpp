#pragma once

#include <set>
#include <string>
#include <vector>

#include "fusionkit/fusion/saturation.hpp"
#include "fusionkit/fusion/system.hpp"

namespace fusionkit::fusion {

enum class LocalKind { N, PC, C };

inline const char* to_string(LocalKind k) {
  switch (k) {
    case LocalKind::N: return "N";
    case LocalKind::PC: return "PC";
    case LocalKind::C: return "C";
  }
  return "?";
}

struct LocalSystem {
  FusionSystem system;
  /// Q fully normalized (kind N) or fully centralized (PC, C), so the
  /// result is known to be saturated when F is.
  bool guaranteed_saturated;
};

/// N_F(Q), N_P(Q)C_F(Q) or C_F(Q).
///
/// phi: R -> S is kept when some psi in Hom_F(QR, QS) restricts to phi and
/// satisfies psi(Q) = Q (N), psi|_Q in Aut_P(Q) (PC) or psi|_Q = id (C).
inline LocalSystem local_system(const FusionSystem& f, int q, LocalKind kind) {
  const SubgroupLattice& l = f.lattice();
  if (q < 0 || q >= l.size() || !l.contains(f.base(), q)) throw NotASubgroup("local system of a subgroup outside P");
  const int base = kind == LocalKind::C ? l.centralizer_in(q, f.base()) : l.normalizer_in(q, f.base());
  const auto& qm = l.subgroup(q).members();
  const std::set<std::vector<int>> aut_p = kind == LocalKind::PC ? aut_base(f, q) : std::set<std::vector<int>>{};

  std::vector<std::vector<Morphism>> isos(l.size());
  for (int r : l.subgroups_of(base)) {
    const int qr = l.join(q, r);
    std::vector<int> q_pos, r_pos;
    for (int x : qm) q_pos.push_back(l.position(qr, x));
    for (int x : l.subgroup(r).members()) r_pos.push_back(l.position(qr, x));
    for (const auto& psi : f.isos(qr)) {
      std::vector<int> on_q(q_pos.size());
      for (std::size_t i = 0; i < q_pos.size(); ++i) on_q[i] = psi.images[q_pos[i]];
      bool ok = false;
      switch (kind) {
        case LocalKind::N: ok = l.find_unsorted(on_q) == q; break;
        case LocalKind::PC: ok = aut_p.count(on_q) > 0; break;
        case LocalKind::C: ok = on_q == qm; break;
      }
      if (!ok) continue;
      Morphism phi{r, 0, std::vector<int>(r_pos.size())};
      for (std::size_t i = 0; i < r_pos.size(); ++i) phi.images[i] = psi.images[r_pos[i]];
      phi.codomain = image_index(l, phi);
      if (l.contains(base, phi.codomain)) isos[r].push_back(std::move(phi));
    }
  }
  bool guaranteed = kind == LocalKind::N ? is_fully_normalized(f, q) : is_fully_centralized(f, q);
  return {FusionSystem(f.lattice_ptr(), base, std::move(isos)), guaranteed};
}

struct SubgroupFlags {
  bool weakly_closed = false;
  bool strongly_closed = false;
  bool normal_in_f = false;
  bool central_in_f = false;
};

inline bool is_weakly_closed(const FusionSystem& f, int q) {
  for (const auto& m : f.isos(q)) {
    if (m.codomain != q) return false;
  }
  return true;
}

inline bool is_strongly_closed(const FusionSystem& f, int q) {
  const SubgroupLattice& l = f.lattice();
  for (int s : l.subgroups_of(q)) {
    for (const auto& m : f.isos(s)) {
      if (!l.contains(q, m.codomain)) return false;
    }
  }
  return true;
}

inline bool is_normal_in(const FusionSystem& f, int q) {
  if (f.lattice().normalizer_in(q, f.base()) != f.base()) return false;
  return local_system(f, q, LocalKind::N).system == f;
}

inline bool is_central_in(const FusionSystem& f, int q) {
  if (f.lattice().centralizer_in(q, f.base()) != f.base()) return false;
  return local_system(f, q, LocalKind::C).system == f;
}

inline SubgroupFlags subgroup_status(const FusionSystem& f, int q) {
  return {is_weakly_closed(f, q), is_strongly_closed(f, q), is_normal_in(f, q), is_central_in(f, q)};
}

namespace detail {

template <class Pred>
int largest_with(const FusionSystem& f, Pred&& pred, const char* what) {
  const SubgroupLattice& l = f.lattice();
  std::vector<int> hits;
  for (int q : f.objects()) {
    if (pred(q)) hits.push_back(q);
  }
  int best = hits.empty() ? l.bottom() : hits.back();
  for (int q : hits) {
    if (l.subgroup(q).order() > l.subgroup(best).order()) best = q;
  }
  for (int q : hits) {
    if (!l.contains(best, q)) throw InternalError(std::string("largest ") + what + " subgroup is not unique");
  }
  return best;
}

}  // namespace detail

/// O_p(F), verified to contain every normal subgroup.
inline int o_p(const FusionSystem& f) {
  return detail::largest_with(f, [&](int q) { return is_normal_in(f, q); }, "normal");
}

/// Z(F), verified to contain every central subgroup.
inline int z_f(const FusionSystem& f) {
  return detail::largest_with(f, [&](int q) { return is_central_in(f, q); }, "central");
}

}  // namespace fusionkit::fusion

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/fusion/lattice.hpp"
#include "fusionkit/group/subgroups.hpp"

namespace fusionkit::fusion {

/// An injective homomorphism between subgroups of P. `images[i]` is the
/// image of the i-th member of the domain; all indices are into the
/// lattice's table.
struct Morphism {
  int domain = 0;
  int codomain = 0;
  std::vector<int> images;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

inline int apply(const SubgroupLattice& l, const Morphism& m, int x) {
  int pos = l.position(m.domain, x);
  if (pos < 0) throw NotASubgroup("element outside the morphism's domain");
  return m.images[pos];
}

inline int image_index(const SubgroupLattice& l, const Morphism& m) { return l.find_unsorted(m.images); }

inline Morphism identity_morphism(const SubgroupLattice& l, int q) { return {q, q, l.subgroup(q).members()}; }

/// c_u restricted to Q, as an isomorphism onto Q^u.
inline Morphism conjugation(const SubgroupLattice& l, int q, int u) {
  Morphism m{q, l.conjugate(q, u), {}};
  m.images.reserve(l.subgroup(q).order());
  for (int x : l.subgroup(q).members()) m.images.push_back(l.table().conj(x, u));
  return m;
}

/// `second` after `first`; the result is an isomorphism onto its image.
inline Morphism compose(const SubgroupLattice& l, const Morphism& second, const Morphism& first) {
  Morphism m{first.domain, 0, {}};
  m.images.reserve(first.images.size());
  for (int y : first.images) m.images.push_back(apply(l, second, y));
  m.codomain = image_index(l, m);
  return m;
}

/// The inverse of the induced isomorphism onto the image.
inline Morphism inverse(const SubgroupLattice& l, const Morphism& m) {
  const int image = image_index(l, m);
  Morphism out{image, m.domain, std::vector<int>(m.images.size())};
  const auto& dom = l.subgroup(m.domain).members();
  for (std::size_t i = 0; i < dom.size(); ++i) out.images[l.position(image, m.images[i])] = dom[i];
  return out;
}

inline Morphism restrict(const SubgroupLattice& l, const Morphism& m, int sub) {
  if (!l.contains(m.domain, sub)) throw NotASubgroup("restriction to a subgroup outside the domain");
  Morphism out{sub, 0, {}};
  out.images.reserve(l.subgroup(sub).order());
  for (int x : l.subgroup(sub).members()) out.images.push_back(apply(l, m, x));
  out.codomain = image_index(l, out);
  return out;
}

/// The same map with its codomain narrowed to the image.
inline Morphism as_isomorphism(const SubgroupLattice& l, Morphism m) {
  m.codomain = image_index(l, m);
  return m;
}

inline bool is_identity(const SubgroupLattice& l, const Morphism& m) {
  return m.images == l.subgroup(m.domain).members();
}

/// A fusion system on a subgroup B ("the base") of the lattice's group.
///
/// Only isomorphisms are stored: `isos(q)` lists every F-isomorphism out of
/// Q with codomain equal to its image, sorted and deduplicated. Hom_F(Q, R)
/// is then the set of those whose image lies in R.
class FusionSystem {
 public:
  FusionSystem(LatticePtr lattice, int base, std::vector<std::vector<Morphism>> isos)
      : lattice_(std::move(lattice)), base_(base), isos_(std::move(isos)) {
    isos_.resize(lattice_->size());
    for (int q = 0; q < lattice_->size(); ++q) {
      auto& list = isos_[q];
      if (!list.empty() && !lattice_->contains(base_, q)) {
        throw NotASubgroup("morphism defined on a subgroup outside the base");
      }
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  int p() const { return lattice_->p(); }
  int base() const { return base_; }
  const Subgroup& base_group() const { return lattice_->subgroup(base_); }
  /// Lattice indices of the subgroups of the base.
  const std::vector<int>& objects() const { return lattice_->subgroups_of(base_); }

  const std::vector<Morphism>& isos(int q) const { return isos_[q]; }

  /// Hom_F(Q, R), each morphism with codomain R.
  std::vector<Morphism> homs(int q, int r) const {
    std::vector<Morphism> out;
    for (const auto& m : isos_[q]) {
      if (lattice_->contains(r, m.codomain)) out.push_back({q, r, m.images});
    }
    return out;
  }

  /// Aut_F(Q).
  std::vector<Morphism> automorphisms(int q) const {
    std::vector<Morphism> out;
    for (const auto& m : isos_[q]) {
      if (m.codomain == q) out.push_back(m);
    }
    return out;
  }

  bool contains(const Morphism& m) const {
    if (m.domain < 0 || m.domain >= lattice_->size()) return false;
    Morphism iso = m;
    iso.codomain = image_index(*lattice_, m);
    if (iso.codomain < 0 || !lattice_->contains(m.codomain, iso.codomain)) return false;
    return std::binary_search(isos_[m.domain].begin(), isos_[m.domain].end(), iso);
  }

  /// Number of stored isomorphisms.
  std::size_t iso_count() const {
    std::size_t n = 0;
    for (const auto& l : isos_) n += l.size();
    return n;
  }
  /// Total number of morphisms over all ordered pairs of objects.
  std::size_t morphism_count() const {
    std::size_t n = 0;
    for (int q : objects()) {
      for (const auto& m : isos_[q]) {
        for (int r : objects()) n += lattice_->contains(r, m.codomain) ? 1 : 0;
      }
    }
    return n;
  }

  /// Every morphism of this system is one of `other`'s.
  bool is_subsystem_of(const FusionSystem& other) const {
    if (lattice_ != other.lattice_ || !lattice_->contains(other.base_, base_)) return false;
    for (int q : objects()) {
      for (const auto& m : isos_[q]) {
        if (!std::binary_search(other.isos_[q].begin(), other.isos_[q].end(), m)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const FusionSystem& a, const FusionSystem& b) {
    return a.lattice_ == b.lattice_ && a.base_ == b.base_ && a.isos_ == b.isos_;
  }
  friend bool operator<(const FusionSystem& a, const FusionSystem& b) {
    if (a.base_ != b.base_) return a.base_ < b.base_;
    if (a.iso_count() != b.iso_count()) return a.iso_count() < b.iso_count();
    return a.isos_ < b.isos_;
  }

 private:
  LatticePtr lattice_;
  int base_;
  std::vector<std::vector<Morphism>> isos_;
};

/// The F-isomorphism class of Q (lattice indices, sorted).
inline std::vector<int> f_class_of(const FusionSystem& f, int q) {
  std::set<int> out;
  for (const auto& m : f.isos(q)) out.insert(m.codomain);
  return {out.begin(), out.end()};
}

inline int normalizer_order(const FusionSystem& f, int q) {
  return static_cast<int>(f.lattice().subgroup(f.lattice().normalizer_in(q, f.base())).order());
}
inline int centralizer_order(const FusionSystem& f, int q) {
  return static_cast<int>(f.lattice().subgroup(f.lattice().centralizer_in(q, f.base())).order());
}

inline bool is_fully_normalized(const FusionSystem& f, int q) {
  const int mine = normalizer_order(f, q);
  for (int r : f_class_of(f, q)) {
    if (normalizer_order(f, r) > mine) return false;
  }
  return true;
}

inline bool is_fully_centralized(const FusionSystem& f, int q) {
  const int mine = centralizer_order(f, q);
  for (int r : f_class_of(f, q)) {
    if (centralizer_order(f, r) > mine) return false;
  }
  return true;
}

/// Lexicographically least subgroup of Q's class among those with the
/// largest normalizer.
inline int fully_normalized_representative(const FusionSystem& f, int q) {
  int best = -1;
  for (int r : f_class_of(f, q)) {
    if (best < 0 || normalizer_order(f, r) > normalizer_order(f, best)) best = r;
  }
  return best;
}

/// F_B(B) on the given base.
inline FusionSystem trivial_system(LatticePtr lattice, int base) {
  const SubgroupLattice& l = *lattice;
  std::vector<std::vector<Morphism>> isos(l.size());
  for (int q : l.subgroups_of(base)) {
    for (int u : l.subgroup(base).members()) isos[q].push_back(conjugation(l, q, u));
  }
  return FusionSystem(std::move(lattice), base, std::move(isos));
}

inline FusionSystem trivial_system(const FusionSystem& f) { return trivial_system(f.lattice_ptr(), f.base()); }

inline bool is_trivial(const FusionSystem& f) { return f == trivial_system(f); }

/// F_P(G) with P the Sylow p-subgroup returned by group::sylow.
inline FusionSystem from_group(const GroupTable& g, int p, const Bounds& bounds = {}) {
  Subgroup s = group::sylow(g, p);
  group::InducedTable local = group::induced_table(g, s, bounds);
  std::vector<int> embedding = local.embedding;
  LatticePtr lattice = make_lattice(p, std::move(local.table), bounds);
  const SubgroupLattice& l = *lattice;
  std::vector<int> restriction(g.order(), -1);
  for (std::size_t i = 0; i < embedding.size(); ++i) restriction[embedding[i]] = static_cast<int>(i);

  std::vector<std::vector<Morphism>> isos(l.size());
  for (int q = 0; q < l.size(); ++q) {
    std::set<std::vector<int>> seen;
    for (int x = 0; x < g.order(); ++x) {
      std::vector<int> images;
      images.reserve(l.subgroup(q).order());
      bool inside = true;
      for (int m : l.subgroup(q).members()) {
        int y = restriction[g.conj(embedding[m], x)];
        if (y < 0) {
          inside = false;
          break;
        }
        images.push_back(y);
      }
      if (!inside || !seen.insert(images).second) continue;
      Morphism mor{q, 0, std::move(images)};
      mor.codomain = image_index(l, mor);
      isos[q].push_back(std::move(mor));
    }
  }
  return FusionSystem(std::move(lattice), l.top(), std::move(isos));
}

/// The full sub-table of F on the subgroups of Q.
inline FusionSystem restrict_to(const FusionSystem& f, int q) {
  const SubgroupLattice& l = f.lattice();
  if (!l.contains(f.base(), q)) throw NotASubgroup("restriction to a subgroup outside the base");
  std::vector<std::vector<Morphism>> isos(l.size());
  for (int a : l.subgroups_of(q)) {
    for (const auto& m : f.isos(a)) {
      if (l.contains(q, m.codomain)) isos[a].push_back(m);
    }
  }
  return FusionSystem(f.lattice_ptr(), q, std::move(isos));
}

namespace detail {

/// A generating morphism stored as a full-length map, with the image of
/// every subgroup of its domain precomputed.
struct Generator {
  int domain;
  std::vector<int> map;               // table index -> image, -1 outside
  std::map<int, int> subgroup_image;  // subgroup of domain -> image subgroup
};

inline Generator make_generator(const SubgroupLattice& l, const Morphism& m) {
  Generator g{m.domain, std::vector<int>(l.table().order(), -1), {}};
  const auto& dom = l.subgroup(m.domain).members();
  for (std::size_t i = 0; i < dom.size(); ++i) g.map[dom[i]] = m.images[i];
  for (int s : l.subgroups_of(m.domain)) {
    g.subgroup_image[s] = l.image_index_of(l.subgroup(s).members(), [&](int x) { return g.map[x]; });
  }
  return g;
}

}  // namespace detail

/// The smallest fusion system on the ambient's base containing the seeds:
/// closed under composition, restriction and inversion, and containing all
/// conjugations by the base.
///
/// Every morphism of the closure is a composite of restrictions of the
/// generators (base conjugations, seeds and inverse seeds), so the isos out
/// of Q are the orbit of id_Q under post-composition by generator
/// restrictions.
inline FusionSystem generate(const FusionSystem& ambient, std::span<const Morphism> seeds) {
  const SubgroupLattice& l = ambient.lattice();
  const int base = ambient.base();

  // Inner restrictions add nothing.
  auto is_inner = [&](const Morphism& m) {
    for (int u : l.subgroup(base).members()) {
      bool same = true;
      const auto& dom = l.subgroup(m.domain).members();
      for (std::size_t i = 0; i < dom.size() && same; ++i) same = l.table().conj(dom[i], u) == m.images[i];
      if (same) return true;
    }
    return false;
  };
  std::vector<Morphism> reduced;
  for (const auto& s : seeds) {
    if (!l.contains(base, s.domain) || !l.contains(base, image_index(l, s))) {
      throw NotASubgroup("seed morphism outside the ambient base");
    }
    Morphism iso = as_isomorphism(l, s);
    if (!is_inner(iso)) reduced.push_back(std::move(iso));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Morphism& a, const Morphism& b) {
    if (l.subgroup(a.domain).order() != l.subgroup(b.domain).order()) {
      return l.subgroup(a.domain).order() > l.subgroup(b.domain).order();
    }
    return a < b;
  });
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

  std::vector<detail::Generator> gens;
  std::vector<Morphism> kept;
  for (const auto& s : reduced) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.domain != s.domain && l.contains(k.domain, s.domain) && restrict(l, k, s.domain) == s) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    kept.push_back(s);
    gens.push_back(detail::make_generator(l, s));
    gens.push_back(detail::make_generator(l, inverse(l, s)));
  }
  for (int u : l.subgroup(base).generators()) gens.push_back(detail::make_generator(l, conjugation(l, base, u)));

  std::vector<std::vector<Morphism>> isos(l.size());
  std::vector<bool> done(l.size(), false);
  for (int a : l.subgroups_of(base)) {
    if (done[a]) continue;
    std::set<std::vector<int>> seen;
    std::vector<std::pair<std::vector<int>, int>> queue;
    queue.emplace_back(l.subgroup(a).members(), a);
    seen.insert(queue.back().first);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& g : gens) {
        const int x = queue[i].second;
        if (!l.contains(g.domain, x)) continue;
        std::vector<int> next(queue[i].first.size());
        for (std::size_t k = 0; k < next.size(); ++k) next[k] = g.map[queue[i].first[k]];
        if (seen.insert(next).second) queue.emplace_back(std::move(next), g.subgroup_image.at(x));
      }
    }
    // One orbit serves the whole class: isos out of psi(A) are theta psi^-1.
    std::map<int, Morphism> first_to;
    for (auto& [images, target] : queue) {
      Morphism m{a, target, images};
      if (!first_to.count(target)) first_to.emplace(target, m);
      isos[a].push_back(std::move(m));
    }
    done[a] = true;
    for (const auto& [target, psi] : first_to) {
      if (done[target]) continue;
      Morphism psi_inv = inverse(l, psi);
      for (const auto& theta : isos[a]) isos[target].push_back(compose(l, theta, psi_inv));
      done[target] = true;
    }
  }
  return FusionSystem(ambient.lattice_ptr(), base, std::move(isos));
}

inline FusionSystem generate(const FusionSystem& ambient, const std::vector<Morphism>& seeds) {
  return generate(ambient, std::span<const Morphism>(seeds));
}

/// Every isomorphism of F, in (domain, images) order.
inline std::vector<Morphism> all_isos(const FusionSystem& f) {
  std::vector<Morphism> out;
  for (int q : f.objects()) out.insert(out.end(), f.isos(q).begin(), f.isos(q).end());
  return out;
}

}  // namespace fusionkit::fusion

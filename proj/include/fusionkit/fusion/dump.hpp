#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/fusion/system.hpp"

namespace fusionkit::fusion {

inline constexpr const char* kDumpFormat = "fusionkit-fusion-system";
inline constexpr int kDumpVersion = 1;

/// Serializes F with every element of P, every subgroup and, for every
/// ordered pair of objects, the full list Hom_F(Q, R).
inline nlohmann::ordered_json to_json(const FusionSystem& f) {
  const SubgroupLattice& l = f.lattice();
  nlohmann::ordered_json j;
  j["format"] = kDumpFormat;
  j["version"] = kDumpVersion;
  j["p"] = f.p();
  j["degree"] = l.table().degree();
  auto elements = nlohmann::ordered_json::array();
  for (const auto& e : l.table().elements()) elements.push_back(e.images());
  j["elements"] = std::move(elements);
  j["base"] = f.base();
  auto subgroups = nlohmann::ordered_json::array();
  for (const auto& s : l.subgroups()) subgroups.push_back(s.members());
  j["subgroups"] = std::move(subgroups);
  auto morphisms = nlohmann::ordered_json::array();
  for (int q : f.objects()) {
    for (int r : f.objects()) {
      for (const auto& m : f.homs(q, r)) {
        morphisms.push_back({{"domain", m.domain}, {"codomain", m.codomain}, {"images", m.images}});
      }
    }
  }
  j["morphisms"] = std::move(morphisms);
  return j;
}

namespace detail {

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("dump lacks field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("dump field \"") + key + "\" has the wrong type");
  }
}

}  // namespace detail

/// Rebuilds a fusion system from a dump, validating the element list, the
/// subgroup enumeration, every morphism, and that each pair's listing is
/// exactly the set of stored isomorphisms landing in the codomain.
inline FusionSystem from_json(const nlohmann::json& j, const Bounds& bounds = {}) {
  if (!j.is_object() || detail::field<std::string>(j, "format") != kDumpFormat) {
    throw FormatError("not a fusion-system dump");
  }
  if (detail::field<int>(j, "version") != kDumpVersion) throw FormatError("unsupported dump version");
  const int p = detail::field<int>(j, "p");
  const int degree = detail::field<int>(j, "degree");
  if (!group::is_prime(p)) throw FormatError("dump prime is not prime");

  std::vector<group::Permutation> elements;
  for (const auto& images : detail::field<std::vector<std::vector<int>>>(j, "elements")) {
    if (static_cast<int>(images.size()) != degree) throw FormatError("element of the wrong degree");
    try {
      elements.emplace_back(images);
    } catch (const ParseError& e) {
      throw FormatError(e.what());
    }
  }
  GroupTable probe = GroupTable::from_elements(elements, {});
  std::vector<int> all(probe.order());
  for (int i = 0; i < probe.order(); ++i) all[i] = i;
  GroupTable table = GroupTable::from_elements(std::move(elements), group::greedy_generators(probe, all));
  LatticePtr lattice = make_lattice(p, std::move(table), bounds);
  const SubgroupLattice& l = *lattice;

  auto subgroups = detail::field<std::vector<std::vector<int>>>(j, "subgroups");
  if (static_cast<int>(subgroups.size()) != l.size()) throw FormatError("subgroup list is incomplete");
  for (int i = 0; i < l.size(); ++i) {
    if (subgroups[i] != l.subgroup(i).members()) throw FormatError("subgroup list differs from the enumeration");
  }
  const int base = detail::field<int>(j, "base");
  if (base < 0 || base >= l.size()) throw FormatError("base index out of range");

  const GroupTable& t = l.table();
  std::set<std::tuple<int, int, std::vector<int>>> listed;
  std::vector<std::vector<Morphism>> isos(l.size());
  std::set<std::pair<int, std::vector<int>>> verified;
  if (!j.contains("morphisms") || !j["morphisms"].is_array()) throw FormatError("dump lacks a morphism list");
  for (const auto& entry : j["morphisms"]) {
    const int q = detail::field<int>(entry, "domain");
    const int r = detail::field<int>(entry, "codomain");
    auto images = detail::field<std::vector<int>>(entry, "images");
    if (q < 0 || q >= l.size() || r < 0 || r >= l.size()) throw FormatError("morphism index out of range");
    if (!l.contains(base, q) || !l.contains(base, r)) throw FormatError("morphism outside the base");
    const auto& qm = l.subgroup(q).members();
    if (images.size() != qm.size()) throw FormatError("image list length differs from the domain order");
    for (int y : images) {
      if (y < 0 || y >= t.order() || !l.subgroup(r).contains(y)) throw FormatError("image outside the codomain");
    }
    if (verified.emplace(q, images).second) {
      std::set<int> distinct(images.begin(), images.end());
      if (distinct.size() != images.size()) throw FormatError("morphism is not injective");
      for (std::size_t a = 0; a < qm.size(); ++a) {
        for (std::size_t b = 0; b < qm.size(); ++b) {
          int ab = l.position(q, t.mul(qm[a], qm[b]));
          if (images[ab] != t.mul(images[a], images[b])) throw FormatError("morphism is not a homomorphism");
        }
      }
      Morphism m{q, 0, images};
      m.codomain = image_index(l, m);
      isos[q].push_back(std::move(m));
    }
    if (!listed.emplace(q, r, std::move(images)).second) throw FormatError("morphism listed twice");
  }
  FusionSystem f(lattice, base, std::move(isos));
  std::size_t expected = 0;
  for (int q : f.objects()) {
    for (int r : f.objects()) {
      for (const auto& m : f.homs(q, r)) {
        ++expected;
        if (!listed.count({q, r, m.images})) {
          throw FormatError("pair (" + std::to_string(q) + ", " + std::to_string(r) +
                            ") omits a morphism implied by the other listings");
        }
      }
    }
  }
  if (expected != listed.size()) throw FormatError("morphism listings are inconsistent");
  return f;
}

}  // namespace fusionkit::fusion

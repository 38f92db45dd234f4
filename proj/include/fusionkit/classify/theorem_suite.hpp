#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fusionkit/bounds.hpp"
#include "fusionkit/classify/constrained.hpp"
#include "fusionkit/classify/sparseness.hpp"
#include "fusionkit/fusion/classification.hpp"
#include "fusionkit/fusion/dump.hpp"
#include "fusionkit/fusion/focal.hpp"
#include "fusionkit/fusion/local.hpp"
#include "fusionkit/fusion/quotient.hpp"
#include "fusionkit/fusion/saturation.hpp"
#include "fusionkit/group/catalog.hpp"
#include "fusionkit/group/structure.hpp"
#include "fusionkit/group/subgroups.hpp"

namespace fusionkit::classify {

using nlohmann::ordered_json;

struct TheoremVerdict {
  std::string id;
  std::string name;
  bool hypotheses_met = false;
  bool conclusion_holds = false;
  ordered_json witness;

  /// pass, fail, vacuous-holds or vacuous-fails.
  std::string status() const {
    if (hypotheses_met) return conclusion_holds ? "pass" : "fail";
    return conclusion_holds ? "vacuous-holds" : "vacuous-fails";
  }
  bool failed() const { return hypotheses_met && !conclusion_holds; }
};

struct TheoremReport {
  std::string system;
  int p = 0;
  bool saturated = false;
  int essential_rank = 0;
  bool sparse = false;
  bool extremely_sparse = false;
  bool sparse_strict = false;
  bool extremely_sparse_strict = false;
  bool constrained = false;
  std::size_t o_p_order = 1;
  std::size_t z_f_order = 1;
  std::size_t focal_order = 1;
  std::optional<int> p_length;
  std::string s4_free = "unknown";
  ordered_json extremely_sparse_witness;  // null when absent
  std::vector<TheoremVerdict> theorems;
  std::optional<std::string> error;

  bool has_failures() const {
    if (error || !saturated) return true;
    for (const auto& t : theorems) {
      if (t.failed()) return true;
    }
    return false;
  }

  const TheoremVerdict* find(const std::string& id) const {
    for (const auto& t : theorems) {
      if (t.id == id) return &t;
    }
    return nullptr;
  }
};

inline ordered_json to_json(const TheoremReport& r) {
  ordered_json j;
  j["system"] = r.system;
  j["p"] = r.p;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["saturated"] = r.saturated;
  j["essential_rank"] = r.essential_rank;
  j["sparse"] = r.sparse;
  j["extremely_sparse"] = r.extremely_sparse;
  j["sparse_strict"] = r.sparse_strict;
  j["extremely_sparse_strict"] = r.extremely_sparse_strict;
  j["constrained"] = r.constrained;
  j["o_p_order"] = r.o_p_order;
  j["z_f_order"] = r.z_f_order;
  j["focal_order"] = r.focal_order;
  j["p_length"] = r.p_length ? ordered_json(*r.p_length) : ordered_json(nullptr);
  j["s4_free"] = r.s4_free;
  j["extremely_sparse_witness"] = r.extremely_sparse_witness;
  auto theorems = ordered_json::array();
  for (const auto& t : r.theorems) {
    theorems.push_back({{"id", t.id},
                        {"name", t.name},
                        {"hypotheses_met", t.hypotheses_met},
                        {"conclusion_holds", t.conclusion_holds},
                        {"status", t.status()},
                        {"witness", t.witness}});
  }
  j["theorems"] = std::move(theorems);
  return j;
}

inline ordered_json to_json(const std::vector<TheoremReport>& reports) {
  auto out = ordered_json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

namespace detail {

inline ordered_json members(const SubgroupLattice& l, int q) { return l.subgroup(q).members(); }

inline bool local_trivial(const FusionSystem& f, int q, fusion::LocalKind kind) {
  return fusion::is_trivial(fusion::local_system(f, q, kind).system);
}

/// Every subgroup of the base that is normal in the base.
inline std::vector<int> normal_in_base(const FusionSystem& f) {
  const SubgroupLattice& l = f.lattice();
  std::vector<int> out;
  for (int q : f.objects()) {
    if (l.normalizer_in(q, f.base()) == f.base()) out.push_back(q);
  }
  return out;
}

/// beta in Aut_F(B) of prime order q != p generating F; T9's fixed-point
/// property is preferred when several qualify.
struct Complement {
  std::optional<Morphism> beta;
  int q = 0;
  bool fixes_invariant = false;
};

inline int morphism_order(const SubgroupLattice& l, const Morphism& m) {
  int n = 1;
  Morphism power = m;
  while (!fusion::is_identity(l, power)) {
    power = fusion::compose(l, m, power);
    ++n;
  }
  return n;
}

inline bool invariant_subgroups_fixed(const FusionSystem& f, const Morphism& beta) {
  const SubgroupLattice& l = f.lattice();
  for (int q : f.objects()) {
    if (q == f.base()) continue;
    Morphism r = fusion::restrict(l, beta, q);
    if (fusion::image_index(l, r) == q && !fusion::is_identity(l, r)) return false;
  }
  return true;
}

inline Complement find_complement(const FusionSystem& f) {
  const SubgroupLattice& l = f.lattice();
  Complement out;
  for (const auto& beta : f.automorphisms(f.base())) {
    const int order = morphism_order(l, beta);
    if (order == f.p() || !group::is_prime(order)) continue;
    if (fusion::generate(f, std::vector<Morphism>{beta}) != f) continue;
    const bool fixes = invariant_subgroups_fixed(f, beta);
    if (!out.beta || (fixes && !out.fixes_invariant)) {
      out.beta = beta;
      out.q = order;
      out.fixes_invariant = fixes;
      if (fixes) break;
    }
  }
  return out;
}

}  // namespace detail

/// Runs every in-scope theorem on F and assembles the report. Theorems are
/// skipped when F is not saturated, since all of them assume it.
inline TheoremReport run_theorem_suite(const FusionSystem& f, const std::string& system_id = "",
                                       const Bounds& bounds = {}) {
  using fusion::LocalKind;
  const SubgroupLattice& l = f.lattice();
  const GroupTable& t = l.table();
  const int p = f.p();
  const int base = f.base();
  TheoremReport r;
  r.system = system_id;
  r.p = p;
  r.saturated = fusion::check_saturation(f).saturated;
  if (!r.saturated) return r;

  const fusion::Classification cls = fusion::classify_subgroups(f, bounds);
  r.essential_rank = cls.essential_rank;
  const Sparseness sp = sparseness(f, bounds);
  const Sparseness strict = sparseness_strict(f);
  r.sparse = sp.sparse;
  r.extremely_sparse = sp.extremely_sparse;
  r.sparse_strict = strict.sparse;
  r.extremely_sparse_strict = strict.extremely_sparse;
  if (sp.sparse && !sp.extremely_sparse && sp.witness) {
    r.extremely_sparse_witness = {{"subgroup", detail::members(l, *sp.witness_subgroup)},
                                  {"order", l.subgroup(*sp.witness_subgroup).order()},
                                  {"system", fusion::to_json(*sp.witness)}};
  }
  r.constrained = is_constrained(f).constrained;
  const int op = fusion::o_p(f);
  const int zf = fusion::z_f(f);
  r.o_p_order = l.subgroup(op).order();
  r.z_f_order = l.subgroup(zf).order();
  const fusion::FocalSeries focal = fusion::focal_series(f, base);
  r.focal_order = l.subgroup(focal.focal).order();
  r.p_length = fusion::p_length(f, bounds).length;

  const GroupTable d8 = group::catalog_group("d8", bounds);
  const bool d8_free = group::section_free(t, f.base_group(), d8, bounds);
  r.s4_free = (p % 2 == 1 || d8_free) ? "implied" : "unknown";
  const bool f_trivial = fusion::is_trivial(f);
  const std::vector<int> normal_f = [&] {
    std::vector<int> out;
    for (int q : f.objects()) {
      if (fusion::is_normal_in(f, q)) out.push_back(q);
    }
    return out;
  }();

  // T1
  {
    TheoremVerdict v{"T1", "sparse implies constrained", sp.sparse && (p % 2 == 1 || d8_free), r.constrained, {}};
    v.witness = {{"sparse", sp.sparse}, {"p_odd", p % 2 == 1}, {"d8_free", d8_free}, {"o_p", detail::members(l, op)}};
    r.theorems.push_back(std::move(v));
  }
  // T2
  {
    TheoremVerdict v{"T2", "sparse: normal Q with QC_P(Q) not normal", false, true, ordered_json::array()};
    bool any = false;
    for (int q : normal_f) {
      const int qc = l.join(q, l.centralizer_in(q, base));
      if (fusion::is_normal_in(f, qc)) continue;
      any = true;
      const bool pc = fusion::local_system(f, q, LocalKind::PC).system == f;
      const bool centre = l.contains(zf, l.meet(q, l.centralizer_in(base, base)));
      v.witness.push_back({{"q", detail::members(l, q)}, {"pc_equals_f", pc}, {"q_meet_z_in_z_f", centre}});
      v.conclusion_holds = v.conclusion_holds && pc && centre;
    }
    v.hypotheses_met = sp.sparse && any;
    r.theorems.push_back(std::move(v));
  }
  // T3
  {
    TheoremVerdict v{"T3", "F generated by PC_F(Q) and N_F(QC_P(Q))", true, true, ordered_json::array()};
    for (int q : normal_f) {
      const int qc = l.join(q, l.centralizer_in(q, base));
      std::vector<Morphism> seeds = fusion::all_isos(fusion::local_system(f, q, LocalKind::PC).system);
      std::vector<Morphism> more = fusion::all_isos(fusion::local_system(f, qc, LocalKind::N).system);
      seeds.insert(seeds.end(), more.begin(), more.end());
      const bool holds = fusion::generate(f, seeds) == f;
      v.witness.push_back({{"q", detail::members(l, q)}, {"generates", holds}});
      v.conclusion_holds = v.conclusion_holds && holds;
    }
    r.theorems.push_back(std::move(v));
  }

  const group::CharacteristicSubgroups chars = group::characteristic_subgroups(t, f.base_group(), p, bounds);
  const int derived = l.find(chars.derived.members());
  const int frattini = l.find(chars.frattini.members());
  const int zj = l.find(group::center(t, chars.thompson).members());
  const bool n_base_trivial = detail::local_trivial(f, base, LocalKind::N);

  // T4
  {
    const bool nzj = detail::local_trivial(f, zj, LocalKind::N);
    TheoremVerdict v{"T4", "N_F(Z(J(P))) trivial iff F trivial", p % 2 == 1, nzj == f_trivial, {}};
    v.witness = {{"z_j", detail::members(l, zj)}, {"n_f_zj_trivial", nzj}, {"f_trivial", f_trivial}};
    r.theorems.push_back(std::move(v));
  }
  // T5
  {
    TheoremVerdict v{"T5", "N_F(P) trivial forces N_F(Q) trivial for P' <= Q <= Phi(P)", n_base_trivial, true,
                     ordered_json::array()};
    for (int q : l.subgroups_of(frattini)) {
      if (!l.contains(q, derived)) continue;
      const bool trivial = detail::local_trivial(f, q, LocalKind::N);
      v.witness.push_back({{"q", detail::members(l, q)}, {"n_f_q_trivial", trivial}});
      v.conclusion_holds = v.conclusion_holds && trivial;
    }
    r.theorems.push_back(std::move(v));
  }
  // T6
  {
    const bool slim = p % 2 == 1 && group::is_slim(t, f.base_group(), p, bounds);
    TheoremVerdict v{"T6", "F trivial iff N_F(P) trivial", (p % 2 == 1 && slim) || (p == 2 && d8_free),
                     f_trivial == n_base_trivial, {}};
    v.witness = {{"slim", slim}, {"d8_free", d8_free}, {"f_trivial", f_trivial}, {"n_f_p_trivial", n_base_trivial}};
    r.theorems.push_back(std::move(v));
  }
  // T7
  {
    TheoremVerdict v{"T7", "trivial hyperfocal limit forces F trivial", focal.limit == l.bottom(), f_trivial, {}};
    v.witness = {{"limit_order", l.subgroup(focal.limit).order()}, {"f_trivial", f_trivial}};
    r.theorems.push_back(std::move(v));
  }
  // T8, T9
  {
    const detail::Complement c = sp.extremely_sparse ? detail::find_complement(f) : detail::Complement{};
    TheoremVerdict t8{"T8", "extremely sparse: rk_e = 0 and cyclic complement", sp.extremely_sparse,
                      cls.essential_rank == 0 && c.beta.has_value(), {}};
    t8.witness = {{"essential_rank", cls.essential_rank}, {"q", c.beta ? ordered_json(c.q) : ordered_json(nullptr)}};
    if (c.beta) t8.witness["beta"] = c.beta->images;
    const bool focal_full = focal.focal == base;
    TheoremVerdict t9{"T9", "extremely sparse: invariant subgroups fixed and [P, F] = P", sp.extremely_sparse,
                      c.beta.has_value() && c.fixes_invariant && focal_full, {}};
    t9.witness = {{"invariant_subgroups_fixed", c.fixes_invariant}, {"focal_order", r.focal_order}};
    r.theorems.push_back(std::move(t8));
    r.theorems.push_back(std::move(t9));
  }
  // T10
  {
    TheoremVerdict v{"T10", "F = PC_F(Q): triviality and normality pass to F/Q", false, true, ordered_json::array()};
    const std::vector<int> normal_b = detail::normal_in_base(f);
    for (int q : normal_b) {
      if (fusion::local_system(f, q, LocalKind::PC).system != f) continue;
      v.hypotheses_met = true;
      fusion::QuotientSystem qs = [&] {
        try {
          return fusion::quotient_system(f, q, bounds);
        } catch (const NotStronglyClosed&) {
          return fusion::QuotientSystem{fusion::trivial_system(f), {}};
        }
      }();
      if (qs.projection.empty()) {
        v.conclusion_holds = false;
        v.witness.push_back({{"q", detail::members(l, q)}, {"error", "not strongly closed"}});
        continue;
      }
      const bool quotient_trivial = fusion::is_trivial(qs.system);
      bool holds = quotient_trivial == f_trivial;
      ordered_json pairs = ordered_json::array();
      for (int rr : normal_b) {
        if (!l.contains(rr, q)) continue;
        const int image = qs.image_of(l, rr);
        const bool a = detail::local_trivial(f, rr, LocalKind::N);
        const bool b = detail::local_trivial(qs.system, image, LocalKind::N);
        const bool c = fusion::is_normal_in(f, rr);
        const bool d = fusion::is_normal_in(qs.system, image);
        if (a != b || c != d) {
          holds = false;
          pairs.push_back({{"r", detail::members(l, rr)}, {"n_f_r_trivial", a}, {"n_quotient_trivial", b},
                           {"r_normal", c}, {"image_normal", d}});
        }
      }
      v.witness.push_back({{"q", detail::members(l, q)}, {"quotient_trivial", quotient_trivial}, {"holds", holds},
                           {"mismatches", std::move(pairs)}});
      v.conclusion_holds = v.conclusion_holds && holds;
    }
    r.theorems.push_back(std::move(v));
  }
  return r;
}

struct CatalogEntry {
  std::string group;
  int p = 0;
};

inline std::vector<CatalogEntry> default_catalog() {
  return {{"s3", 3}, {"s4", 2}, {"a4", 2}, {"sl23", 2}, {"d8", 2}, {"d16", 2}, {"pgl27", 2}, {"cp_wr_cp(3)", 3}};
}

inline std::string system_id(const CatalogEntry& e) { return e.group + "/p" + std::to_string(e.p); }

/// Builds F_P(G) for each entry and runs the suite; an entry that cannot be
/// built is reported with its error rather than aborting the batch.
inline std::vector<TheoremReport> run_catalog_suite(const std::vector<CatalogEntry>& entries,
                                                    const Bounds& bounds = {}) {
  std::vector<TheoremReport> out;
  for (const auto& e : entries) {
    try {
      GroupTable g = group::catalog_group(e.group, bounds);
      out.push_back(run_theorem_suite(fusion::from_group(g, e.p, bounds), system_id(e), bounds));
    } catch (const Error& err) {
      TheoremReport r;
      r.system = system_id(e);
      r.p = e.p;
      r.error = err.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace fusionkit::classify

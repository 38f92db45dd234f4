#include <gtest/gtest.h>

#include <functional>
#include <optional>

#include "fixtures.hpp"
#include "fusionkit/fusionkit.hpp"
#include "oracles.hpp"

using namespace fusionkit;
using namespace fusionkit::fusion;
using fixtures::klein_fours;
using fixtures::system_of;

namespace {

const std::vector<std::pair<std::string, int>> kCatalog{
    {"s3", 3}, {"s3", 2}, {"s4", 2}, {"s4", 3}, {"a4", 2}, {"sl23", 2}, {"d8", 2},
    {"d16", 2}, {"pgl27", 2}, {"pgl27", 3}, {"pgl27", 7}, {"cp_wr_cp(3)", 3}, {"dihedral(12)", 2}};

int order_of(const FusionSystem& f, int q) { return static_cast<int>(f.lattice().subgroup(q).order()); }

}  // namespace

TEST(FromGroup, PaperExampleSizes) {
  FusionSystem s4 = system_of("s4", 2);
  EXPECT_EQ(s4.lattice().size(), 10);
  EXPECT_EQ(order_of(s4, s4.base()), 8);
  FusionSystem pgl = system_of("pgl27", 2);
  EXPECT_EQ(order_of(pgl, pgl.base()), 16);
  EXPECT_EQ(pgl.lattice().size(), 19);
}

TEST(FromGroup, AutomorphismCounts) {
  FusionSystem f = system_of("s4", 2);
  EXPECT_EQ(f.automorphisms(o_p(f)).size(), 6u);
  EXPECT_EQ(f.automorphisms(f.base()).size(), aut_base(f, f.base()).size());
  EXPECT_EQ(f.automorphisms(f.base()).size(), 4u);  // Inn(D8)
}

TEST(FromGroup, PGroupGivesInnerSystem) {
  for (const char* name : {"d8", "d16", "cp_wr_cp(3)"}) {
    const int p = std::string(name) == "cp_wr_cp(3)" ? 3 : 2;
    FusionSystem f = system_of(name, p);
    EXPECT_TRUE(is_trivial(f)) << name;
    const auto& l = f.lattice();
    for (int q : f.objects()) {
      for (int r : f.objects()) {
        std::set<std::vector<int>> expected;
        for (int u : f.base_group().members()) {
          if (l.contains(r, l.conjugate(q, u))) expected.insert(conjugation(l, q, u).images);
        }
        std::set<std::vector<int>> got;
        for (const auto& m : f.homs(q, r)) got.insert(m.images);
        ASSERT_EQ(got, expected);
      }
    }
  }
}

TEST(FromGroup, TrivialExamples) {
  EXPECT_FALSE(is_trivial(system_of("s4", 2)));
  EXPECT_TRUE(is_trivial(system_of("s3", 2)));  // N(C2) = C2
  EXPECT_TRUE(is_trivial(trivial_system(system_of("pgl27", 2))));
  FusionSystem one = system_of("s4", 5);
  EXPECT_EQ(one.lattice().size(), 1);
  EXPECT_TRUE(is_trivial(one));
  EXPECT_TRUE(check_saturation(one).saturated);
  EXPECT_EQ(essential_rank(one), 0);
  EXPECT_EQ(p_length(one).length, 0);
}

TEST(Axioms, CatalogSystemsSatisfyAxiomsAndSaturation) {
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    SaturationReport rep = check_saturation(f);
    EXPECT_TRUE(rep.saturated) << name << "/" << p << " first violation: "
                               << (rep.violations.empty() ? "" : rep.violations.front().axiom);
    EXPECT_TRUE(check_saturation(trivial_system(f)).saturated);
  }
}

TEST(Axioms, SurgeryMutantViolatesExtension) {
  FusionSystem f = system_of("s4", 2);
  FusionSystem mutant = from_json(fixtures::surgery_mutant_dump(f));
  SaturationReport rep = check_saturation(mutant);
  ASSERT_FALSE(rep.saturated);
  std::set<std::string> axioms;
  for (const auto& v : rep.violations) axioms.insert(v.axiom);
  EXPECT_EQ(axioms, std::set<std::string>{"extension"});
}

TEST(Axioms, DroppingAnInverseIsCaught) {
  FusionSystem f = system_of("s4", 2);
  const auto& l = f.lattice();
  // Keep one non-inner automorphism of V4 (order 3) without its inverse.
  std::vector<std::vector<Morphism>> isos(l.size());
  for (int q : f.objects()) isos[q] = trivial_system(f).isos(q);
  const int v4 = o_p(f);
  for (const auto& m : f.automorphisms(v4)) {
    if (!aut_base(f, v4).count(m.images) && !is_identity(l, compose(l, m, m))) {
      isos[v4].push_back(m);
      break;
    }
  }
  FusionSystem broken(f.lattice_ptr(), f.base(), isos);
  std::set<std::string> axioms;
  for (const auto& v : check_saturation(broken).violations) axioms.insert(v.axiom);
  EXPECT_TRUE(axioms.count("inverse"));
  EXPECT_TRUE(axioms.count("composition"));
}

TEST(Generate, EmptyAndFullSeeds) {
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    EXPECT_EQ(generate(f, std::vector<Morphism>{}), trivial_system(f));
    EXPECT_EQ(generate(f, all_isos(f)), f);
  }
}

TEST(Generate, ResultIsClosedAndInsideAmbient) {
  FusionSystem f = system_of("pgl27", 2);
  const std::set<std::string> closure_axioms{"inclusion", "inner", "inverse", "composition", "restriction"};
  int tried = 0;
  for (int q : f.objects()) {
    for (const auto& m : f.isos(q)) {
      if (++tried % 37 != 0) continue;
      FusionSystem e = generate(f, std::vector<Morphism>{m});
      EXPECT_TRUE(e.contains(m));
      EXPECT_TRUE(e.is_subsystem_of(f));
      for (const auto& v : check_saturation(e).violations) EXPECT_FALSE(closure_axioms.count(v.axiom)) << v.axiom;
    }
  }
}

TEST(Generate, CentralizerAndNormalizerPiecesRecoverS4) {
  FusionSystem f = system_of("s4", 2);
  const auto& l = f.lattice();
  const int q = o_p(f);
  const int qc = l.join(q, l.centralizer_in(q, f.base()));
  std::vector<Morphism> seeds = all_isos(local_system(f, q, LocalKind::PC).system);
  auto more = all_isos(local_system(f, qc, LocalKind::N).system);
  seeds.insert(seeds.end(), more.begin(), more.end());
  EXPECT_EQ(generate(f, seeds), f);
}

TEST(Classification, EssentialRanks) {
  EXPECT_EQ(essential_rank(system_of("d8", 2)), 0);
  // Only the normal Klein four group is essential: Out_F of the other one is
  // C2, a 2-group, which has no strongly 2-embedded subgroup.
  FusionSystem s4 = system_of("s4", 2);
  Classification c = classify_subgroups(s4);
  EXPECT_EQ(c.essential_rank, 1);
  ASSERT_EQ(c.essentials.size(), 1u);
  EXPECT_EQ(c.essentials.front(), o_p(s4));
  auto fours = klein_fours(s4);
  ASSERT_EQ(fours.size(), 2u);
  for (int v : fours) {
    EXPECT_TRUE(c.of(v).centric);
    if (v != o_p(s4)) {
      EXPECT_FALSE(c.of(v).essential);
      EXPECT_EQ(out_f_table(s4, v).order(), 2);
    }
  }
  EXPECT_EQ(essential_rank(system_of("pgl27", 2)), 1);
  EXPECT_EQ(essential_rank(system_of("a4", 2)), 0);
}

TEST(Classification, StructuralProperties) {
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    const auto& l = f.lattice();
    Classification c = classify_subgroups(f);
    const int zp = l.centralizer_in(f.base(), f.base());
    const int zo = l.join(zp, o_p(f));
    for (const auto& s : c.statuses) {
      const int q = s.subgroup;
      if (s.essential) {
        EXPECT_TRUE(s.centric);
        EXPECT_NE(q, f.base());
        EXPECT_TRUE(l.contains(q, zo)) << name;
        GroupTable aut = aut_f_table(f, q);
        EXPECT_FALSE(group::is_p_power(aut.order(), p));
        // No normal Sylow p-subgroup in Aut_F(Q).
        group::Subgroup syl = group::sylow(aut, p);
        EXPECT_FALSE(group::is_normal(aut, syl));
      }
      bool cyclic = false;
      for (int x : l.subgroup(q).members()) cyclic = cyclic || l.table().element_order(x) == static_cast<int>(l.subgroup(q).order());
      if (cyclic && l.subgroup(q).order() > 1) EXPECT_FALSE(s.essential);
      if (s.normal_in_f) EXPECT_TRUE(s.strongly_closed);
      if (s.strongly_closed) EXPECT_TRUE(s.weakly_closed);
      if (s.weakly_closed) EXPECT_EQ(l.normalizer_in(q, f.base()), f.base());
    }
    const bool base_normal = is_normal_in(f, f.base());
    const bool generated = generate(f, f.automorphisms(f.base())) == f;
    EXPECT_EQ(c.essential_rank == 0, base_normal) << name;
    EXPECT_EQ(base_normal, generated) << name;
  }
}

TEST(NPhi, Examples) {
  FusionSystem f = system_of("s4", 2);
  const auto& l = f.lattice();
  for (int q : f.objects()) EXPECT_EQ(n_phi(f, identity_morphism(l, q)), l.normalizer_in(q, f.base()));
  for (const auto& m : f.automorphisms(f.base())) EXPECT_EQ(n_phi(f, m), f.base());
  const int v4 = o_p(f);
  bool found = false;
  for (const auto& m : f.automorphisms(v4)) found = found || n_phi(f, m) == v4;
  EXPECT_TRUE(found);
  for (const auto& [name, p] : kCatalog) {
    FusionSystem g = system_of(name, p);
    const auto& gl = g.lattice();
    for (int q : g.objects()) {
      for (const auto& m : g.isos(q)) {
        const int n = n_phi(g, m);
        EXPECT_TRUE(gl.contains(n, gl.join(q, gl.centralizer_in(q, g.base()))));
        EXPECT_TRUE(gl.contains(gl.normalizer_in(q, g.base()), n));
      }
    }
  }
}

TEST(LocalSystems, Chain) {
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    EXPECT_EQ(local_system(f, f.lattice().bottom(), LocalKind::C).system, f);
    for (int q : f.objects()) {
      auto c = local_system(f, q, LocalKind::C).system;
      auto pc = local_system(f, q, LocalKind::PC).system;
      auto n = local_system(f, q, LocalKind::N).system;
      EXPECT_TRUE(c.is_subsystem_of(pc));
      EXPECT_TRUE(pc.is_subsystem_of(n));
      EXPECT_TRUE(n.is_subsystem_of(f));
      if (local_system(f, q, LocalKind::N).guaranteed_saturated) EXPECT_TRUE(check_saturation(n).saturated);
    }
  }
}

TEST(LocalSystems, NormalizerOfBaseInS4IsTrivial) {
  FusionSystem f = system_of("s4", 2);
  EXPECT_TRUE(is_trivial(local_system(f, f.base(), LocalKind::N).system));
}

TEST(NormalCentral, Examples) {
  FusionSystem d16 = system_of("d16", 2);
  EXPECT_EQ(o_p(d16), d16.base());
  EXPECT_EQ(z_f(d16), d16.lattice().centralizer_in(d16.base(), d16.base()));
  FusionSystem s4 = system_of("s4", 2);
  EXPECT_EQ(order_of(s4, o_p(s4)), 4);
  EXPECT_EQ(klein_fours(s4).size(), 2u);
  EXPECT_EQ(order_of(s4, z_f(s4)), 1);
  FusionSystem pgl = system_of("pgl27", 2);
  EXPECT_EQ(o_p(pgl), pgl.lattice().bottom());
  // O_2(F_{D8}(S4)) is the Klein four group normal in S4.
  GroupTable g = group::catalog_group("s4");
  group::InducedTable local = group::induced_table(g, group::sylow(g, 2));
  std::vector<int> image;
  for (int x : s4.lattice().subgroup(o_p(s4)).members()) image.push_back(local.embedding[x]);
  std::sort(image.begin(), image.end());
  EXPECT_TRUE(group::is_normal(g, group::from_members(g, image)));
}

TEST(Quotient, Examples) {
  FusionSystem s4 = system_of("s4", 2);
  QuotientSystem by_v4 = quotient_system(s4, o_p(s4));
  EXPECT_EQ(by_v4.system.lattice().table().order(), 2);
  EXPECT_TRUE(is_trivial(by_v4.system));
  // Cross-check: S4/V4 = S3, whose 2-fusion is trivial on C2.
  EXPECT_TRUE(is_trivial(system_of("s3", 2)));

  QuotientSystem by_one = quotient_system(s4, s4.lattice().bottom());
  EXPECT_EQ(by_one.system.iso_count(), s4.iso_count());
  EXPECT_EQ(by_one.system.lattice().size(), s4.lattice().size());
  EXPECT_FALSE(is_trivial(by_one.system));
  EXPECT_EQ(essential_rank(by_one.system), essential_rank(s4));

  QuotientSystem by_all = quotient_system(s4, s4.base());
  EXPECT_EQ(by_all.system.lattice().size(), 1);
  EXPECT_THROW(quotient_system(s4, klein_fours(s4).back() == o_p(s4) ? klein_fours(s4).front() : klein_fours(s4).back()),
               NotStronglyClosed);
}

TEST(Quotient, SaturatedForStronglyClosed) {
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    for (int q : f.objects()) {
      if (!is_strongly_closed(f, q)) continue;
      EXPECT_TRUE(check_saturation(quotient_system(f, q).system).saturated) << name;
    }
  }
}

TEST(Quotient, BurnsideInstance) {
  // F = PC_F(Q) with P' <= Q: the quotient on P/Q has essential rank 0.
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    const auto& l = f.lattice();
    const auto chars = group::characteristic_subgroups(l.table(), f.base_group(), p);
    const int derived = l.find(chars.derived.members());
    for (int q : f.objects()) {
      if (!l.contains(q, derived) || l.normalizer_in(q, f.base()) != f.base()) continue;
      if (local_system(f, q, LocalKind::PC).system != f) continue;
      EXPECT_EQ(essential_rank(quotient_system(f, q).system), 0) << name;
    }
  }
}

TEST(Alperin, InnerIsOneStep) {
  FusionSystem f = system_of("s4", 2);
  const auto& l = f.lattice();
  for (int q : f.objects()) {
    for (int u : f.base_group().members()) {
      auto steps = alperin_decompose(f, conjugation(l, q, u));
      EXPECT_EQ(steps.size(), 1u);
      EXPECT_EQ(steps.front().hub, f.base());
    }
  }
}

TEST(Alperin, FusionOfInvolutionsRoutesThroughV4) {
  FusionSystem f = system_of("s4", 2);
  const auto& l = f.lattice();
  const int v4 = o_p(f);
  const int z = l.centralizer_in(f.base(), f.base());
  for (const auto& m : f.isos(z)) {
    if (m.codomain == z) continue;
    auto steps = alperin_decompose(f, m);
    EXPECT_EQ(recompose(f, z, steps), m);
    bool through_v4 = false;
    for (const auto& s : steps) through_v4 = through_v4 || s.hub == v4;
    EXPECT_TRUE(through_v4);
  }
}

TEST(Alperin, EveryCatalogIsomorphismRecomposes) {
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    Classification c = classify_subgroups(f);
    for (int q : f.objects()) {
      for (const auto& m : f.isos(q)) {
        auto steps = alperin_decompose(f, m, c.essentials);
        ASSERT_EQ(recompose(f, q, steps), m) << name;
        for (const auto& s : steps) {
          EXPECT_TRUE(s.hub == f.base() || std::find(c.essentials.begin(), c.essentials.end(), s.hub) != c.essentials.end());
        }
      }
    }
  }
}

TEST(Alperin, RejectsForeignMorphism) {
  FusionSystem f = system_of("s4", 2);
  FusionSystem inner = trivial_system(f);
  const int v4 = o_p(f);
  for (const auto& m : f.automorphisms(v4)) {
    if (!inner.contains(m)) {
      EXPECT_THROW(alperin_decompose(inner, m, std::vector<int>{}), NoDecomposition);
      break;
    }
  }
}

TEST(Focal, MatchesSylowMeetDerived) {
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    GroupTable g = group::catalog_group(name);
    EXPECT_EQ(f.lattice().subgroup(focal_subgroup(f, f.base())).members(), oracle::sylow_meet_derived(g, p)) << name;
  }
}

TEST(Focal, SeriesExamples) {
  FusionSystem s4 = system_of("s4", 2);
  FocalSeries fs = focal_series(s4, s4.base());
  EXPECT_EQ(fs.focal, o_p(s4));
  EXPECT_EQ(fs.limit, o_p(s4));
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    const auto& l = f.lattice();
    FocalSeries s = focal_series(f, f.base());
    for (int it : s.iterates) EXPECT_TRUE(l.contains(it, s.limit));
    const auto chars = group::characteristic_subgroups(l.table(), f.base_group(), p);
    EXPECT_EQ(l.subgroup(focal_subgroup(trivial_system(f), f.base())).members(), chars.derived.members());
  }
}

namespace {

/// Shortest chain 1 = P_0 < ... < P_n = P with each P_i strongly closed and
/// P_i/P_{i-1} normal in F/P_{i-1}, by exhaustive search.
std::optional<int> shortest_normal_chain(const FusionSystem& f) {
  const auto& l = f.lattice();
  std::optional<int> best;
  std::function<void(int, int)> walk = [&](int current, int depth) {
    if (current == f.base()) {
      if (!best || depth < *best) best = depth;
      return;
    }
    QuotientSystem qs = quotient_system(f, current);
    for (int next : f.objects()) {
      if (next == current || !l.contains(next, current) || !is_strongly_closed(f, next)) continue;
      if (!is_normal_in(qs.system, qs.image_of(l, next))) continue;
      walk(next, depth + 1);
    }
  };
  walk(l.bottom(), 0);
  return best;
}

}  // namespace

TEST(PLength, ExamplesAndGreedyDominance) {
  EXPECT_EQ(p_length(system_of("s4", 2)).length, 2);
  EXPECT_EQ(p_length(system_of("d8", 2)).length, 1);
  EXPECT_FALSE(p_length(system_of("pgl27", 2)).length.has_value());
  EXPECT_EQ(p_length(system_of("s3", 3)).length, 1);
  for (const auto& [name, p] : kCatalog) {
    FusionSystem f = system_of(name, p);
    EXPECT_EQ(p_length(f).length, shortest_normal_chain(f)) << name << "/" << p;
  }
}

TEST(Construction, PglOnOrderedPairsGivesTheSameFusion) {
  // PGL(2,7) acting on the 56 ordered pairs of distinct projective points.
  const group::GroupSpec line = group::catalog("pgl27");
  const int n = line.degree;
  auto pair_index = [n](int a, int b) { return a * (n - 1) + (b < a ? b : b - 1); };
  group::GroupSpec pairs;
  pairs.degree = n * (n - 1);
  for (const auto& g : line.generators) {
    std::vector<int> images(pairs.degree);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) images[pair_index(a, b)] = pair_index(g.images()[a], g.images()[b]);
      }
    }
    pairs.generators.emplace_back(std::move(images));
  }
  FusionSystem f = from_group(line.build(), 2);
  FusionSystem h = from_group(pairs.build(), 2);
  EXPECT_EQ(h.lattice().table().order(), 16);
  EXPECT_EQ(h.lattice().size(), f.lattice().size());
  EXPECT_EQ(h.iso_count(), f.iso_count());
  EXPECT_EQ(h.morphism_count(), f.morphism_count());
  EXPECT_EQ(essential_rank(h), essential_rank(f));
  EXPECT_EQ(order_of(h, o_p(h)), order_of(f, o_p(f)));
  EXPECT_EQ(order_of(h, focal_subgroup(h, h.base())), order_of(f, focal_subgroup(f, f.base())));
  EXPECT_TRUE(check_saturation(h).saturated);
}

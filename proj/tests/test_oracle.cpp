#include <doctest.h>

#include <algorithm>
#include <set>

#include "pgroup/analysis.hpp"
#include "pgroup/oracle.hpp"
#include "pgroup/structure.hpp"
#include "test_util.hpp"

using namespace pgroup;
using test::corpus_view;

TEST_CASE("central map enumeration") {
  SUBCASE("witness group: 27 candidates, all bijective") {
    auto g = corpus_view("sg2187-131");
    CentralMapSet maps(g, 10000);
    CHECK(maps.maps().size() == 27);
    CHECK(autcent_bruteforce(maps) == 27);
    CHECK(autcentz_bruteforce(maps) == 9);
  }
  SUBCASE("extraspecial 27: 9 candidates") {
    auto g = corpus_view("es27-exp3");
    CentralMapSet maps(g, 10000);
    CHECK(maps.maps().size() == 9);
    CHECK(autcent_bruteforce(maps) == 9);
    CHECK(autcentz_bruteforce(maps) == 9);
  }
  SUBCASE("the zero map is the identity automorphism") {
    auto g = corpus_view("es27-exp9");
    CentralMapSet maps(g, 10000);
    bool found_identity = false;
    for (const auto& m : maps.maps()) {
      bool is_id = true;
      for (std::uint32_t x = 0; x < g->order() && is_id; ++x)
        is_id = maps.evaluate(m, x) == x;
      if (is_id) {
        found_identity = true;
        CHECK(m.bijective);
        CHECK(m.fixes_center);
      }
    }
    CHECK(found_identity);
  }
  SUBCASE("abelian input is rejected") {
    CHECK_THROWS_AS(CentralMapSet(corpus_view("c9"), 10000), DomainError);
  }
  SUBCASE("budget exhaustion is an error, not a truncation") {
    CHECK_THROWS_AS(CentralMapSet(corpus_view("sg2187-131"), 10),
                    BudgetExceeded);
  }
  SUBCASE("count chain: |Autcent_Z| <= |Autcent| <= candidates") {
    for (const auto& e : builtin_corpus()) {
      auto g = corpus_view(e.name);
      if (g->is_abelian()) continue;
      CentralMapSet maps(g, 10000);
      CHECK(autcentz_bruteforce(maps) <= autcent_bruteforce(maps));
      CHECK(autcent_bruteforce(maps) <= maps.maps().size());
    }
  }
}

TEST_CASE("bijective central maps are closed under composition") {
  // Identify each map by its images on the generators; composition evaluates
  // one map through the other. Exhaustive over all pairs for the smaller
  // groups, which both rules closure in and pins the group structure down.
  for (const char* name : {"es27-exp3", "d16", "sg2187-131"}) {
    auto g = corpus_view(name);
    CentralMapSet maps(g, 10000);
    std::set<std::vector<std::uint32_t>> bijective_keys;
    std::vector<const CentralMap*> bij;
    for (const auto& m : maps.maps())
      if (m.bijective) {
        bij.push_back(&m);
        bijective_keys.insert(m.gen_images);
      }
    for (const CentralMap* f : bij)
      for (const CentralMap* h : bij) {
        std::vector<std::uint32_t> composed;
        for (auto gen_image : h->gen_images)
          composed.push_back(maps.evaluate(*f, gen_image));
        CHECK(bijective_keys.count(composed) == 1);
      }
  }
}

TEST_CASE("inner center check") {
  SUBCASE("witness group: 9 distinct inner maps, all central fixing Z") {
    auto g = corpus_view("sg2187-131");
    CentralMapSet maps(g, 10000);
    auto upper = upper_central_series(g);
    auto r = inner_center_check(maps, upper[1]);
    CHECK(r.embeds);
    CHECK(r.distinct_inner_maps == 9);
  }
  SUBCASE("extraspecial 27: class 2, so Z_2 = G and count = |G/Z|") {
    auto g = corpus_view("es27-exp3");
    CentralMapSet maps(g, 10000);
    auto r = inner_center_check(maps, Subgroup::whole_group(g));
    CHECK(r.embeds);
    CHECK(r.distinct_inner_maps == 9);
  }
}

TEST_CASE("direct factor search") {
  SUBCASE("C3 x extraspecial-27: factor found") {
    auto g = corpus_view("c3xes27");
    PurityResult r =
        direct_factor_search(g, center(g), frattini_and_rank(g).first);
    REQUIRE(r.verdict == Purity::FactorFound);
    // The factor really is a direct decomposition.
    Subgroup c = Subgroup::from_members(g, r.factor_c);
    Subgroup n = Subgroup::from_members(g, r.factor_n);
    CHECK(subgroup_intersection(c, n).is_trivial());
    CHECK(static_cast<std::uint64_t>(c.order()) * n.order() == g->order());
    CHECK(n.is_normal());
    CHECK(c.centralizes(Subgroup::whole_group(g)));
  }
  SUBCASE("extraspecial 27: purely non-abelian by exhaustive search") {
    auto g = corpus_view("es27-exp3");
    PurityResult r =
        direct_factor_search(g, center(g), frattini_and_rank(g).first);
    CHECK(r.verdict == Purity::PurelyNonAbelian);
  }
  SUBCASE("witness group: purely non-abelian") {
    auto g = corpus_view("sg2187-131");
    PurityResult r =
        direct_factor_search(g, center(g), frattini_and_rank(g).first);
    CHECK(r.verdict == Purity::PurelyNonAbelian);
  }
  SUBCASE("C2 x D8: factor found") {
    auto g = corpus_view("c2xd8");
    PurityResult r =
        direct_factor_search(g, center(g), frattini_and_rank(g).first);
    CHECK(r.verdict == Purity::FactorFound);
  }
  SUBCASE("abelian groups always decompose") {
    for (const char* name : {"c5", "c9", "c3xc3"}) {
      auto g = corpus_view(name);
      PurityResult r = direct_factor_search(g, Subgroup::whole_group(g),
                                            frattini_and_rank(g).first);
      CHECK(r.verdict == Purity::FactorFound);
    }
  }
  SUBCASE("no purely non-abelian corpus group has Omega_1(Z) outside Phi") {
    for (const auto& e : builtin_corpus()) {
      auto g = corpus_view(e.name);
      PurityResult r = direct_factor_search(
          g, g->is_abelian() ? Subgroup::whole_group(g) : center(g),
          frattini_and_rank(g).first);
      if (r.verdict != Purity::PurelyNonAbelian) continue;
      Subgroup z = center(g);
      Subgroup phi = frattini_and_rank(g).first;
      for (auto m : omega1(z).members()) CHECK(phi.contains(m));
    }
  }
  SUBCASE("tiny budget yields inconclusive, never a wrong answer") {
    auto g = corpus_view("sg2187-131");
    PurityResult r = direct_factor_search(g, center(g),
                                          frattini_and_rank(g).first, 2);
    CHECK(r.verdict == Purity::Inconclusive);
  }
}

TEST_CASE("Curran and Adney-Yen agreement corpus-wide") {
  for (const auto& e : builtin_corpus()) {
    auto g = corpus_view(e.name);
    if (g->is_abelian()) continue;
    StructuralData s = compute_structure(g);
    CentralMapSet maps(g, 10000);
    CHECK_MESSAGE(autcentz_bruteforce(maps) == centz_order_formula(s), e.name);
    PurityResult purity =
        direct_factor_search(g, s.center_sub, s.frattini_sub);
    if (purity.verdict == Purity::PurelyNonAbelian)
      CHECK_MESSAGE(autcent_bruteforce(maps) == cent_order_formula(s), e.name);
  }
}

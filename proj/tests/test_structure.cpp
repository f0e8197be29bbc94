#include <doctest.h>

#include <algorithm>

#include "pgroup/parser.hpp"
#include "pgroup/structure.hpp"
#include "test_util.hpp"

using namespace pgroup;
using test::corpus_view;

namespace {

// Element id of g1^e1 ... gn^en in a pc-backed view.
std::uint32_t id_of(const FiniteGroupView& v, std::initializer_list<std::uint32_t> e) {
  return v.presentation()->rank(ExponentVec(e));
}

std::shared_ptr<const FiniteGroupView> view_of(const char* text) {
  auto pc = std::make_shared<const PcPresentation>(parse_presentation(text, "t"));
  REQUIRE(pc->check_consistency().passed);
  return std::make_shared<const FiniteGroupView>(
      FiniteGroupView::from_presentation(pc));
}

}  // namespace

TEST_CASE("center") {
  SUBCASE("witness group: <g4>, order 9, type [2]") {
    auto g = corpus_view("sg2187-131");
    Subgroup z = center(g);
    CHECK(z.order() == 9);
    CHECK(abelian_invariants(z) == AbelianType(3, {2}));
    CHECK(z == cyclic_subgroup(g, id_of(*g, {0, 0, 0, 1, 0, 0, 0})));
    CHECK(z.members() == test::center_oracle(*g));
  }
  SUBCASE("abelian group: the whole group") {
    auto g = corpus_view("c9");
    CHECK(center(g).order() == g->order());
  }
  SUBCASE("extraspecial 27: order 3, against the all-pairs oracle") {
    for (const char* name : {"es27-exp3", "es27-exp9"}) {
      auto g = corpus_view(name);
      Subgroup z = center(g);
      CHECK(z.order() == 3);
      CHECK(z.members() == test::center_oracle(*g));
    }
  }
}

TEST_CASE("derived subgroup") {
  SUBCASE("witness group: <g3,g5,g6,g7>, order 81") {
    auto g = corpus_view("sg2187-131");
    Subgroup d = derived_subgroup(g);
    CHECK(d.order() == 81);
    std::vector<std::uint32_t> span_gens = {
        id_of(*g, {0, 0, 1, 0, 0, 0, 0}), id_of(*g, {0, 0, 0, 0, 1, 0, 0}),
        id_of(*g, {0, 0, 0, 0, 0, 1, 0}), id_of(*g, {0, 0, 0, 0, 0, 0, 1})};
    CHECK(d == Subgroup::closure(g, span_gens));
    CHECK(d == test::derived_oracle(g));
    CHECK(d.is_abelian());
  }
  SUBCASE("abelian group: trivial") {
    CHECK(derived_subgroup(corpus_view("c3xc3")).is_trivial());
  }
  SUBCASE("extraspecial 27: equals the center") {
    auto g = corpus_view("es27-exp3");
    CHECK(derived_subgroup(g) == center(g));
    CHECK(derived_subgroup(g) == test::derived_oracle(g));
  }
}

TEST_CASE("lower central series") {
  SUBCASE("witness group has class 4") {
    auto g = corpus_view("sg2187-131");
    auto series = lower_central_series(g);
    CHECK(series.size() == 5);  // gamma_1 .. gamma_5 = 1
    CHECK(nilpotence_class(g) == 4);
    std::vector<std::uint32_t> orders;
    for (auto& s : series) orders.push_back(s.order());
    CHECK(orders == std::vector<std::uint32_t>{2187, 81, 27, 3, 1});
  }
  SUBCASE("abelian groups have class 1") {
    CHECK(nilpotence_class(corpus_view("c5")) == 1);
  }
  SUBCASE("extraspecial 27 has class 2, against the brute-force oracle") {
    auto g = corpus_view("es27-exp3");
    CHECK(nilpotence_class(g) == 2);
    CHECK(test::lower_series_orders_oracle(g) ==
          std::vector<std::uint32_t>{27, 3, 1});
  }
  SUBCASE("gamma_2 equals the derived subgroup, corpus-wide") {
    for (const auto& e : builtin_corpus()) {
      auto g = corpus_view(e.name);
      auto series = lower_central_series(g);
      if (series.size() > 1) CHECK(series[1] == derived_subgroup(g));
      else CHECK(derived_subgroup(g).is_trivial());
    }
  }
}

TEST_CASE("upper central series") {
  SUBCASE("witness group: |Z2/Z| = 9") {
    auto g = corpus_view("sg2187-131");
    auto series = upper_central_series(g);
    REQUIRE(series.size() >= 2);
    CHECK(series[1].order() / series[0].order() == 9);
    CHECK(series.size() == 4);
    CHECK(series.back().order() == 2187);
  }
  SUBCASE("abelian: a single term") {
    auto g = corpus_view("c3xc3");
    auto series = upper_central_series(g);
    CHECK(series.size() == 1);
    CHECK(series[0].order() == 9);
  }
  SUBCASE("dihedral of order 16, against the direct-formula oracle") {
    auto g = corpus_view("d16");
    auto series = upper_central_series(g);
    std::vector<std::uint32_t> orders;
    for (auto& s : series) orders.push_back(s.order());
    CHECK(orders == test::upper_series_orders_oracle(g));
    CHECK(orders == std::vector<std::uint32_t>{2, 4, 16});
  }
  SUBCASE("both series have length equal to the class, corpus-wide") {
    for (const auto& e : builtin_corpus()) {
      auto g = corpus_view(e.name);
      CHECK(upper_central_series(g).size() == nilpotence_class(g));
      CHECK(lower_central_series(g).size() == nilpotence_class(g) + 1);
    }
  }
  SUBCASE("maximal-class corpus groups have |Z| = p") {
    for (const auto& e : builtin_corpus()) {
      auto g = corpus_view(e.name);
      if (!g->is_abelian() &&
          g->log_order() - nilpotence_class(g) == 1)
        CHECK(center(g).order() == g->prime());
    }
  }
}

TEST_CASE("frattini subgroup and rank") {
  SUBCASE("witness group: d = 2 and g4 in Phi(G) - G'") {
    auto g = corpus_view("sg2187-131");
    auto [phi, d] = frattini_and_rank(g);
    CHECK(d == 2);
    CHECK(phi.order() == 243);
    std::uint32_t g4 = id_of(*g, {0, 0, 0, 1, 0, 0, 0});
    CHECK(phi.contains(g4));
    CHECK_FALSE(derived_subgroup(g).contains(g4));
  }
  SUBCASE("C3 x C3: Phi trivial, d = 2") {
    auto [phi, d] = frattini_and_rank(corpus_view("c3xc3"));
    CHECK(phi.is_trivial());
    CHECK(d == 2);
  }
  SUBCASE("C9: Phi of order 3, d = 1") {
    auto [phi, d] = frattini_and_rank(corpus_view("c9"));
    CHECK(phi.order() == 3);
    CHECK(d == 1);
  }
}

TEST_CASE("subgroup product and intersection") {
  auto g = corpus_view("sg2187-131");
  Subgroup z = center(g);
  Subgroup d = derived_subgroup(g);

  SUBCASE("G'Z(G) has order 81*9/3 = 243") {
    Subgroup dz = subgroup_product(d, z);
    CHECK(dz.order() == 243);
    CHECK(static_cast<std::uint64_t>(dz.order()) *
              subgroup_intersection(d, z).order() ==
          static_cast<std::uint64_t>(d.order()) * z.order());
  }
  SUBCASE("Z(G) meet G' = <g7> of order 3") {
    Subgroup meet = subgroup_intersection(z, d);
    CHECK(meet.order() == 3);
    CHECK(meet == cyclic_subgroup(g, id_of(*g, {0, 0, 0, 0, 0, 0, 1})));
  }
  SUBCASE("idempotence and units") {
    CHECK(subgroup_product(d, d) == d);
    CHECK(subgroup_product(Subgroup::trivial(g), z) == z);
    CHECK(subgroup_intersection(z, z) == z);
    CHECK(subgroup_intersection(z, Subgroup::trivial(g)).is_trivial());
  }
  SUBCASE("|AB| |A meet B| = |A||B| on central-series pairs, corpus-wide") {
    for (const auto& e : builtin_corpus()) {
      auto h = corpus_view(e.name);
      auto upper = upper_central_series(h);
      Subgroup dh = derived_subgroup(h);
      for (auto& s : upper) {
        Subgroup prod = subgroup_product(dh, s);
        Subgroup meet = subgroup_intersection(dh, s);
        CHECK(static_cast<std::uint64_t>(prod.order()) * meet.order() ==
              static_cast<std::uint64_t>(dh.order()) * s.order());
      }
    }
  }
}

TEST_CASE("quotient") {
  auto g = corpus_view("sg2187-131");
  SUBCASE("G/Z(G) has order 243 and class 3") {
    auto q = std::make_shared<const FiniteGroupView>(
        FiniteGroupView::quotient(g, center(g)));
    CHECK(q->order() == 243);
    CHECK(nilpotence_class(q) == 3);
  }
  SUBCASE("G/G is trivial") {
    auto q = FiniteGroupView::quotient(g, Subgroup::whole_group(g));
    CHECK(q.order() == 1);
  }
  SUBCASE("G/G'Z(G) is C3 x C3") {
    Subgroup dz = subgroup_product(derived_subgroup(g), center(g));
    auto q = std::make_shared<const FiniteGroupView>(
        FiniteGroupView::quotient(g, dz));
    CHECK(q->order() == 9);
    CHECK(abelian_invariants(*q) == AbelianType(3, {1, 1}));
  }
  SUBCASE("non-normal subgroup is rejected") {
    auto h = corpus_view("d16");
    // <g1> (a reflection) is not normal in D16.
    Subgroup refl = cyclic_subgroup(h, id_of(*h, {1, 0, 0, 0}));
    CHECK_THROWS_AS(FiniteGroupView::quotient(h, refl), DomainError);
  }
  SUBCASE("pullback through the retained epimorphism") {
    auto q = std::make_shared<const FiniteGroupView>(
        FiniteGroupView::quotient(g, center(g)));
    Subgroup zq = center(q);
    Subgroup z2 = pullback(zq);
    CHECK(z2.order() == 81);  // Z_2(G)
    CHECK(z2 == upper_central_series(g)[1]);
  }
}

TEST_CASE("abelian invariants") {
  SUBCASE("Z of the witness group is C9") {
    auto g = corpus_view("sg2187-131");
    CHECK(abelian_invariants(center(g)) == AbelianType(3, {2}));
  }
  SUBCASE("C3 x C3 is [1,1]") {
    CHECK(abelian_invariants(*corpus_view("c3xc3")) == AbelianType(3, {1, 1}));
  }
  SUBCASE("G/G' of the witness group is C9 x C3") {
    auto g = corpus_view("sg2187-131");
    auto q = std::make_shared<const FiniteGroupView>(
        FiniteGroupView::quotient(g, derived_subgroup(g)));
    CHECK(abelian_invariants(*q) == AbelianType(3, {2, 1}));
  }
  SUBCASE("backend independence: pc-backed C9 x C3 vs synthesized table") {
    auto pc_backed = view_of(
        "group c9xc3\nprime 3\nngens 3\npow 1: 0 1 0\nend\n");
    auto table_backed =
        FiniteGroupView::abelian_from_type(AbelianType(3, {2, 1}), "copy");
    CHECK(abelian_invariants(*pc_backed) == abelian_invariants(table_backed));
    CHECK(abelian_invariants(*pc_backed) == AbelianType(3, {2, 1}));
  }
  SUBCASE("non-abelian input is rejected") {
    CHECK_THROWS_AS(abelian_invariants(*corpus_view("d16")), DomainError);
  }
}

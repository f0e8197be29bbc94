#include <doctest.h>

#include <set>

#include "pgroup/hom.hpp"
#include "pgroup/structure.hpp"
#include "test_util.hpp"

using namespace pgroup;
using test::corpus_view;

namespace {

std::shared_ptr<const FiniteGroupView> abelian_view(
    std::uint32_t p, std::vector<std::uint32_t> exps, const char* name) {
  return std::make_shared<const FiniteGroupView>(
      FiniteGroupView::abelian_from_type(AbelianType(p, std::move(exps)), name));
}

}  // namespace

TEST_CASE("hom_order") {
  CHECK(hom_order(AbelianType(3, {1, 1}), AbelianType(3, {2})) == 9);
  CHECK(hom_order(AbelianType(3, {}), AbelianType(3, {2, 1})) == 1);
  CHECK(hom_order(AbelianType(2, {3, 1}), AbelianType(2, {2, 2})) == 64);
  CHECK_THROWS_AS(hom_order(AbelianType(2, {1}), AbelianType(3, {1})),
                  DomainError);

  SUBCASE("([2,1], [2]) at p = 3 is 27, against full enumeration") {
    auto a = abelian_view(3, {2, 1}, "A");
    auto b = abelian_view(3, {2}, "B");
    AbelianBasis basis(a);
    auto homs = enumerate_homs(basis, Subgroup::whole_group(b));
    // Each descriptor must actually be a homomorphism on all pairs.
    for (const auto& h : homs)
      for (std::uint32_t x = 0; x < a->order(); ++x)
        for (std::uint32_t y = 0; y < a->order(); ++y) {
          std::uint32_t xy = a->mul(x, y);
          CHECK(h.evaluate(basis, *b, xy) ==
                b->mul(h.evaluate(basis, *b, x), h.evaluate(basis, *b, y)));
        }
    CHECK(homs.size() == 27);
    CHECK(hom_order(AbelianType(3, {2, 1}), AbelianType(3, {2})) == 27);
  }
  SUBCASE("symmetry in the arguments") {
    std::vector<AbelianType> types = {
        AbelianType(3, {}),     AbelianType(3, {1}),    AbelianType(3, {2}),
        AbelianType(3, {1, 1}), AbelianType(3, {2, 1}), AbelianType(3, {3, 1}),
    };
    for (const auto& a : types)
      for (const auto& b : types) CHECK(hom_order(a, b) == hom_order(b, a));
  }
}

TEST_CASE("abelian_basis") {
  SUBCASE("cyclic C9: one basis element of order 9") {
    AbelianBasis basis(abelian_view(3, {2}, "C9"));
    CHECK(basis.orders() == std::vector<std::uint32_t>{9});
  }
  SUBCASE("G/G'Z(G) of the witness group: two elements of order 3") {
    auto g = corpus_view("sg2187-131");
    Subgroup dz = subgroup_product(derived_subgroup(g), center(g));
    auto q = std::make_shared<const FiniteGroupView>(
        FiniteGroupView::quotient(g, dz));
    AbelianBasis basis(q);
    CHECK(basis.orders() == std::vector<std::uint32_t>{3, 3});
    // Coordinates reproduce all nine cosets.
    std::set<std::uint32_t> seen;
    for (std::uint32_t x = 0; x < q->order(); ++x) {
      const auto& c = basis.coordinates(x);
      std::uint32_t rebuilt = FiniteGroupView::identity();
      for (std::size_t i = 0; i < c.size(); ++i)
        rebuilt = q->mul(rebuilt, q->power(basis.elements()[i], c[i]));
      CHECK(rebuilt == x);
      seen.insert(x);
    }
    CHECK(seen.size() == 9);
  }
  SUBCASE("C9 x C3 table group: orders [9,3] and coordinate round-trip") {
    auto a = abelian_view(3, {2, 1}, "C9xC3");
    AbelianBasis basis(a);
    CHECK(basis.orders() == std::vector<std::uint32_t>{9, 3});
    CHECK(basis.type() == AbelianType(3, {2, 1}));
    std::uint64_t prod = 1;
    for (auto o : basis.orders()) prod *= o;
    CHECK(prod == a->order());
    for (std::uint32_t x = 0; x < a->order(); ++x) {
      const auto& c = basis.coordinates(x);
      std::uint32_t rebuilt = FiniteGroupView::identity();
      for (std::size_t i = 0; i < c.size(); ++i)
        rebuilt = a->mul(rebuilt, a->power(basis.elements()[i], c[i]));
      CHECK(rebuilt == x);
    }
  }
  SUBCASE("non-abelian input is rejected") {
    CHECK_THROWS_AS(AbelianBasis(corpus_view("es27-exp3")), DomainError);
  }
}

TEST_CASE("enumerate_homs") {
  SUBCASE("C3 x C3 into a C9 subgroup: 9 descriptors") {
    auto a = abelian_view(3, {1, 1}, "C3xC3");
    auto g = corpus_view("sg2187-131");
    Subgroup z = center(g);  // C9 inside the witness group
    auto homs = enumerate_homs(AbelianBasis(a), z);
    CHECK(homs.size() == 9);
    for (const auto& h : homs)
      for (auto img : h.images) CHECK(g->power(img, 3) == 0);
  }
  SUBCASE("anything into the trivial subgroup: exactly the zero map") {
    auto a = abelian_view(3, {2, 1, 1}, "A");
    auto b = abelian_view(3, {1}, "B");
    Subgroup triv = Subgroup::trivial(b);
    auto homs = enumerate_homs(AbelianBasis(a), triv);
    REQUIRE(homs.size() == 1);
    for (auto img : homs[0].images) CHECK(img == 0);
  }
  SUBCASE("C9 x C3 into C9: 27 descriptors, product-preserving on samples") {
    auto a = abelian_view(3, {2, 1}, "C9xC3");
    auto b = abelian_view(3, {2}, "C9");
    AbelianBasis basis(a);
    auto homs = enumerate_homs(basis, Subgroup::whole_group(b));
    CHECK(homs.size() ==
          hom_order(AbelianType(3, {2, 1}), AbelianType(3, {2})));
    test::Lcg lcg;
    for (const auto& h : homs)
      for (int t = 0; t < 100; ++t) {
        std::uint32_t x = lcg.next(a->order());
        std::uint32_t y = lcg.next(a->order());
        CHECK(h.evaluate(basis, *b, a->mul(x, y)) ==
              b->mul(h.evaluate(basis, *b, x), h.evaluate(basis, *b, y)));
      }
  }
  SUBCASE("budget exhaustion is an explicit error") {
    auto a = abelian_view(3, {1, 1, 1}, "A");
    auto b = abelian_view(3, {1, 1, 1}, "B");
    CHECK_THROWS_AS(
        enumerate_homs(AbelianBasis(a), Subgroup::whole_group(b), 100),
        BudgetExceeded);
  }
  SUBCASE("formula agreement on small pairs, both routes") {
    std::vector<std::vector<std::uint32_t>> shapes = {
        {}, {1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}};
    for (std::uint32_t p : {2u, 3u})
      for (const auto& sa : shapes)
        for (const auto& sb : shapes) {
          AbelianType ta(p, sa), tb(p, sb);
          if (ta.order() > 27 || tb.order() > 27) continue;
          auto a = abelian_view(p, sa, "A");
          auto b = abelian_view(p, sb, "B");
          Subgroup whole = Subgroup::whole_group(b);
          CHECK(enumerate_homs(AbelianBasis(a), whole, 1 << 20).size() ==
                hom_order(ta, tb));
          CHECK(hom_count_scan(ta, whole) == hom_order(ta, tb));
        }
  }
}

#include <doctest.h>

#include <set>

#include "pgroup/corpus.hpp"
#include "pgroup/parser.hpp"
#include "test_util.hpp"

using namespace pgroup;

namespace {

ExponentVec vec(std::initializer_list<std::uint32_t> v) { return ExponentVec(v); }

const PcPresentation& witness() {
  return *find_corpus_entry("sg2187-131")->presentation;
}

}  // namespace

TEST_CASE("parser reads the corpus witness block") {
  const PcPresentation& g = witness();
  CHECK(g.prime() == 3);
  CHECK(g.ngens() == 7);
  CHECK(g.power_relation_count() == 3);
  CHECK(g.commutator_relation_count() == 5);
  CHECK(g.power_relation(1) == vec({0, 0, 0, 1, 0, 0, 0}));
  // Negative exponent in the file: g3^3 = g7^-1 is normalized to g7^2.
  CHECK(g.power_relation(3) == vec({0, 0, 0, 0, 0, 0, 2}));
  CHECK(g.commutator_relation(2, 1) == vec({0, 0, 1, 0, 0, 0, 0}));
  CHECK_FALSE(g.has_commutator_relation(4, 1));
}

TEST_CASE("parser: the three-commutator variant parses but is inconsistent") {
  // Same counts as the transcription without the two forced tail relations:
  // 3 power relations, 3 nontrivial commutators. It parses fine; consistency
  // is a separate question.
  PcPresentation g = parse_presentation(test::kInconsistentWitnessText, "<fixture>");
  CHECK(g.prime() == 3);
  CHECK(g.ngens() == 7);
  CHECK(g.power_relation_count() == 3);
  CHECK(g.commutator_relation_count() == 3);
  auto report = g.check_consistency();
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.failures.empty());
}

TEST_CASE("parser: single generator, no relations") {
  PcPresentation g = parse_presentation("group c\nprime 5\nngens 1\nend\n", "t");
  CHECK(g.prime() == 5);
  CHECK(g.ngens() == 1);
  CHECK(g.order() == 5);
}

TEST_CASE("parser: weighting violation names the relation") {
  const char* text = "group w\nprime 3\nngens 3\ncomm 2 1: 1 0 0\nend\n";
  CHECK_THROWS_WITH_AS(parse_presentation(text, "t"),
                       doctest::Contains("comm 2 1"), ParseError);
}

TEST_CASE("parser: error positions and classes") {
  CHECK_THROWS_AS(parse_presentation("group g\nprime 4\nngens 1\nend\n", "t"),
                  ParseError);  // non-prime p
  CHECK_THROWS_AS(parse_presentation("group g\nprime 3\nngens 1\npow 2: 0\nend\n", "t"),
                  ParseError);  // index out of range
  CHECK_THROWS_AS(parse_presentation("group g\nprime 3\nngens 1\nbogus\nend\n", "t"),
                  ParseError);  // unknown directive
  CHECK_THROWS_AS(parse_presentation("group g\nprime 3\nngens 1\n", "t"),
                  ParseError);  // missing end
  try {
    parse_presentation("group g\nprime 3\nngens 2\npow 1: 0 x\nend\n", "t");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("parser: multiple blocks in one input") {
  auto groups = parse_presentations(
      "group a\nprime 2\nngens 1\nend\ngroup b\nprime 3\nngens 1\nend\n", "t");
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].name() == "a");
  CHECK(groups[1].order() == 3);
}

TEST_CASE("collect_product on the witness group") {
  const PcPresentation& g = witness();
  const ExponentVec e = g.identity();
  const ExponentVec g1 = g.generator(1), g2 = g.generator(2);

  SUBCASE("identity laws") {
    for (std::uint32_t i = 1; i <= 7; ++i) {
      CHECK(g.product(e, g.generator(i)) == g.generator(i));
      CHECK(g.product(g.generator(i), e) == g.generator(i));
    }
  }
  SUBCASE("g2 * g1 = g1 g2 g3, by expanding the stored [g2,g1] = g3") {
    CHECK(g.product(g2, g1) == vec({1, 1, 1, 0, 0, 0, 0}));
  }
  SUBCASE("g1^2 * g1 = g4 via the power relation") {
    CHECK(g.product(g.product(g1, g1), g1) == vec({0, 0, 0, 1, 0, 0, 0}));
  }
  SUBCASE("table products agree with collection on a deterministic sample") {
    auto view = test::corpus_view("sg2187-131");
    test::Lcg lcg;
    for (int t = 0; t < 2000; ++t) {
      ElementId a = lcg.next(view->order());
      ElementId b = lcg.next(view->order());
      CHECK(view->mul(a, b) == g.rank(g.product(g.unrank(a), g.unrank(b))));
    }
  }
}

TEST_CASE("power") {
  const PcPresentation& g = witness();
  SUBCASE("zeroth power is the identity") {
    CHECK(g.power(g.generator(2), 0) == g.identity());
  }
  SUBCASE("g4^3 = g7") {
    CHECK(g.power(g.generator(4), 3) == vec({0, 0, 0, 0, 0, 0, 1}));
  }
  SUBCASE("g3^3 = g7^-1 = g7^2") {
    CHECK(g.power(g.generator(3), 3) == vec({0, 0, 0, 0, 0, 0, 2}));
  }
  SUBCASE("negative powers invert") {
    test::Lcg lcg;
    for (int t = 0; t < 50; ++t) {
      ExponentVec a = g.unrank(lcg.next(static_cast<std::uint32_t>(g.order())));
      CHECK(g.product(g.power(a, -1), a) == g.identity());
      CHECK(g.power(a, -2) == g.power(g.inverse(a), 2));
    }
  }
}

TEST_CASE("commutator") {
  const PcPresentation& g = witness();
  CHECK(g.commutator(g.generator(3), g.identity()) == g.identity());
  // [g1,g2] = [g2,g1]^-1 = g3^-1 = g3^2.
  CHECK(g.commutator(g.generator(1), g.generator(2)) ==
        vec({0, 0, 2, 0, 0, 0, 0}));
  CHECK(g.commutator(g.generator(1), g.generator(4)) == g.identity());
}

TEST_CASE("element_order") {
  const PcPresentation& g = witness();
  CHECK(g.element_order(g.identity()) == 1);
  CHECK(g.element_order(g.generator(4)) == 9);
  CHECK(g.element_order(g.generator(7)) == 3);
  SUBCASE("orders divide the group order") {
    test::Lcg lcg;
    for (int t = 0; t < 100; ++t) {
      ExponentVec a = g.unrank(lcg.next(static_cast<std::uint32_t>(g.order())));
      CHECK(g.order() % g.element_order(a) == 0);
    }
  }
}

TEST_CASE("enumerate_elements") {
  CHECK(parse_presentation("group c\nprime 5\nngens 1\nend\n", "t")
            .enumerate_elements()
            .size() == 5);
  CHECK(witness().enumerate_elements().size() == 2187);
  CHECK(parse_presentation("group c\nprime 3\nngens 2\nend\n", "t")
            .enumerate_elements()
            .size() == 9);

  SUBCASE("lexicographic order and rank round-trip") {
    const PcPresentation& g = witness();
    auto all = g.enumerate_elements();
    std::set<ExponentVec> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (ElementId id = 0; id < 100; ++id) {
      CHECK(g.rank(all[id]) == id);
      CHECK(g.unrank(id) == all[id]);
    }
    CHECK(all[0] == g.identity());
  }
}

TEST_CASE("collect_product output stays reduced") {
  const PcPresentation& g = witness();
  test::Lcg lcg;
  for (int t = 0; t < 500; ++t) {
    ExponentVec a = g.unrank(lcg.next(static_cast<std::uint32_t>(g.order())));
    ExponentVec b = g.unrank(lcg.next(static_cast<std::uint32_t>(g.order())));
    ExponentVec c = g.product(a, b);
    for (auto e : c) CHECK(e < g.prime());
  }
}

TEST_CASE("check_consistency") {
  SUBCASE("witness group passes at order 2187") {
    auto report = witness().check_consistency();
    CHECK(report.passed);
    CHECK(report.closure_size == 2187);
  }
  SUBCASE("C5 passes at order 5") {
    auto report = parse_presentation("group c\nprime 5\nngens 1\nend\n", "t")
                      .check_consistency();
    CHECK(report.passed);
    CHECK(report.closure_size == 5);
  }
  SUBCASE("mutating comm 2 1 to g5 breaks closure or associativity") {
    std::map<std::uint32_t, ExponentVec> pows;
    std::map<std::pair<std::uint32_t, std::uint32_t>, ExponentVec> comms;
    const PcPresentation& g = witness();
    for (std::uint32_t i = 1; i <= 7; ++i)
      if (g.has_power_relation(i)) pows[i] = g.power_relation(i);
    for (std::uint32_t j = 2; j <= 7; ++j)
      for (std::uint32_t i = 1; i < j; ++i)
        if (g.has_commutator_relation(j, i)) comms[{j, i}] = g.commutator_relation(j, i);
    comms[{2, 1}] = vec({0, 0, 0, 0, 1, 0, 0});  // was g3, now g5
    PcPresentation mutated("mutated", 3, 7, pows, comms);
    auto report = mutated.check_consistency();
    CHECK_FALSE(report.passed);
  }
  SUBCASE("every corpus entry passes") {
    for (const auto& e : builtin_corpus()) {
      auto report = e.presentation->check_consistency();
      CHECK_MESSAGE(report.passed, e.name);
      CHECK(report.closure_size == e.presentation->order());
    }
  }
}

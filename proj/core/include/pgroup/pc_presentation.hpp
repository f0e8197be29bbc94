#ifndef PGROUP_PC_PRESENTATION_HPP
#define PGROUP_PC_PRESENTATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgroup/errors.hpp"

namespace pgroup {

/// Canonical element of a pc group: the exponent vector (e1, ..., en) of the
/// normal form g1^e1 ... gn^en, each entry in [0, p). Two elements are equal
/// iff their vectors are equal; the identity is the all-zero vector.
using ExponentVec = std::vector<std::uint32_t>;

/// Element identifier: the lexicographic rank of the exponent vector
/// (e1 most significant). The identity always has id 0.
using ElementId = std::uint32_t;

struct ConsistencyReport {
  bool passed = false;
  std::uint64_t expected_order = 0;
  std::uint64_t closure_size = 0;
  std::vector<std::string> failures;  // deterministic order, capped
};

/// A weighted power-commutator presentation of a finite p-group on generators
/// g1, ..., gn: relations give gi^p and [gj, gi] (j > i) as words supported on
/// generators of index strictly greater than the left-hand side. Omitted
/// relations mean the identity. The weighting restriction is what makes
/// collection terminate.
///
/// Immutable after construction; all operations are pure and safe to call
/// from concurrent readers.
class PcPresentation {
public:
  /// Validates prime, exponent ranges and the weighting invariant.
  /// Relation keys are 1-based generator indices as in the file format.
  PcPresentation(std::string name, std::uint32_t prime, std::uint32_t ngens,
                 std::map<std::uint32_t, ExponentVec> power_relations,
                 std::map<std::pair<std::uint32_t, std::uint32_t>, ExponentVec>
                     commutator_relations);

  const std::string& name() const { return name_; }
  std::uint32_t prime() const { return prime_; }
  std::uint32_t ngens() const { return ngens_; }

  /// p^ngens. Throws DomainError if it does not fit in 64 bits.
  std::uint64_t order() const;

  /// Image of gi^p, identity vector when the relation is omitted. 1-based i.
  ExponentVec power_relation(std::uint32_t i) const;
  /// Value of [gj, gi] for j > i, identity vector when omitted. 1-based.
  ExponentVec commutator_relation(std::uint32_t j, std::uint32_t i) const;
  bool has_power_relation(std::uint32_t i) const;
  bool has_commutator_relation(std::uint32_t j, std::uint32_t i) const;
  std::size_t power_relation_count() const;
  std::size_t commutator_relation_count() const;

  ExponentVec identity() const { return ExponentVec(ngens_, 0); }
  /// Normal form of the generator gi (1-based).
  ExponentVec generator(std::uint32_t i) const;

  /// Normal form of a * b via collection from the left: repeatedly rewrite the
  /// leftmost violation, either an out-of-order adjacent pair (gj gi = gi gj
  /// [gj,gi] for j > i) or an exponent >= p (gi^e = gi^(e-p) * power word).
  ExponentVec product(const ExponentVec& a, const ExponentVec& b) const;

  /// a^k for any integer k; negative k means inverse powers. The exponent is
  /// reduced mod p^ngens (element orders divide the group order).
  ExponentVec power(const ExponentVec& a, std::int64_t k) const;

  ExponentVec inverse(const ExponentVec& a) const { return power(a, -1); }

  /// a^-1 b^-1 a b in normal form.
  ExponentVec commutator(const ExponentVec& a, const ExponentVec& b) const;

  /// Smallest k >= 1 with a^k = identity; a power of p.
  std::uint64_t element_order(const ExponentVec& a) const;

  /// All p^ngens normal forms in lexicographic exponent order; the index in
  /// this list is the element identifier used everywhere else.
  std::vector<ExponentVec> enumerate_elements() const;

  ElementId rank(const ExponentVec& v) const;
  ExponentVec unrank(ElementId id) const;

  /// Verifies that collection really defines a group of order p^ngens:
  ///  (a) the closure of the generators under product has exactly p^ngens
  ///      elements,
  ///  (b) the product is associative: on the complete set of overlap words
  ///      whose collection-equality is equivalent to global associativity
  ///      (gk(gj gi) = (gk gj)gi for k > j > i, plus the power overlaps
  ///      gj^p gi = gj^(p-1)(gj gi), gj gi^p = (gj gi) gi^(p-1) and
  ///      gi^p gi = gi gi^p), on all ordered generator triples, and on a
  ///      deterministic sample of 10^4 element triples,
  ///  (c) every stored relation re-evaluates to itself under product.
  /// The sample in (b) is driven by the LCG x -> 1664525*x + 1013904223
  /// (mod 2^32) seeded with 12345, three draws per triple, so failures are
  /// reproducible. Returns a failure report instead of throwing.
  ConsistencyReport check_consistency() const;

private:
  struct Run {
    std::uint32_t gen;  // 0-based
    std::uint32_t exp;
  };

  ExponentVec collect(std::vector<Run> word) const;
  void append_element(std::vector<Run>& word, const ExponentVec& v) const;

  std::string name_;
  std::uint32_t prime_;
  std::uint32_t ngens_;
  // 0-based dense storage; empty word = identity.
  std::vector<std::optional<ExponentVec>> power_;
  std::vector<std::vector<std::optional<ExponentVec>>> comm_;  // [j][i], j > i
  // Relation right-hand sides pre-split into runs for the collector.
  std::vector<std::vector<Run>> power_word_;
  std::vector<std::vector<std::vector<Run>>> comm_word_;
};

}  // namespace pgroup

#endif  // PGROUP_PC_PRESENTATION_HPP

#ifndef PGROUP_ORACLE_HPP
#define PGROUP_ORACLE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/group_view.hpp"
#include "pgroup/hom.hpp"
#include "pgroup/subgroup.hpp"

namespace pgroup {

/// One candidate central endomorphism alpha(x) = x * f(x G'), where f runs
/// over Hom(G/G', Z(G)). The map is stored by its value on each coset of G'
/// (so evaluation is one table lookup after the coset projection) plus its
/// images on the group generators, which identify it uniquely.
struct CentralMap {
  HomDescriptor hom;                       // images of the G/G' basis in Z(G)
  std::vector<std::uint32_t> coset_value;  // f on each G/G' coset, as G-ids
  std::vector<std::uint32_t> gen_images;   // alpha on the generators
  bool bijective = false;
  bool fixes_center = false;

  std::uint32_t evaluate(const FiniteGroupView& G,
                         std::span<const std::uint32_t> epi,
                         std::uint32_t x) const {
    return G.mul(x, coset_value[epi[x]]);
  }
};

/// The full candidate list Hom(G/G', Z(G)) with flags computed by evaluating
/// every map on all of G. Also keeps the quotient machinery so callers can
/// evaluate maps and compose them.
class CentralMapSet {
public:
  /// Throws BudgetExceeded when |Hom(G/G', Z(G))| > budget_homs, and
  /// DomainError on abelian input.
  CentralMapSet(std::shared_ptr<const FiniteGroupView> G,
                std::uint64_t budget_homs);

  const std::vector<CentralMap>& maps() const { return maps_; }
  const std::shared_ptr<const FiniteGroupView>& group() const { return group_; }
  const FiniteGroupView& derived_quotient() const { return *quot_; }
  const AbelianBasis& basis() const { return *basis_; }

  std::uint32_t evaluate(const CentralMap& m, std::uint32_t x) const {
    return m.evaluate(*group_, quot_->epimorphism(), x);
  }

  /// Count of bijective maps (= |Autcent(G)| by exhaustion).
  std::uint64_t autcent_count() const;
  /// Count of bijective maps fixing Z(G) pointwise (= |Autcent_Z(G)|).
  std::uint64_t autcentz_count() const;

  /// Index of the map with the given generator images, or nullopt.
  std::optional<std::size_t> find_by_gen_images(
      const std::vector<std::uint32_t>& gen_images) const;

private:
  std::shared_ptr<const FiniteGroupView> group_;
  std::shared_ptr<const FiniteGroupView> quot_;  // G/G'
  std::unique_ptr<AbelianBasis> basis_;
  std::vector<CentralMap> maps_;
};

/// Ground-truth counts. Both run the full CentralMapSet enumeration.
std::uint64_t autcent_bruteforce(const CentralMapSet& maps);
std::uint64_t autcentz_bruteforce(const CentralMapSet& maps);

/// Verifies that conjugation by each element of Z_2(G) is one of the
/// enumerated central maps with the fixes-center flag, and that the number of
/// distinct such conjugations is |Z_2(G)/Z(G)|. This is the literal set-level
/// form of Z(Inn(G)) <= Autcent_Z(G).
struct InnerCenterCheck {
  bool embeds = false;
  std::uint64_t distinct_inner_maps = 0;
};
InnerCenterCheck inner_center_check(const CentralMapSet& maps,
                                    const Subgroup& second_center);

enum class Purity : std::uint8_t {
  PurelyNonAbelian,
  FactorFound,
  Inconclusive,
};

struct PurityResult {
  Purity verdict = Purity::Inconclusive;
  std::string note;
  // When a factor was found: G = C x N with C nontrivial cyclic central.
  std::vector<std::uint32_t> factor_c;  // members of C
  std::vector<std::uint32_t> factor_n;  // members of N
  std::uint64_t subgroups_visited = 0;
};

/// Decides whether G has a nontrivial abelian direct factor. Every nontrivial
/// cyclic central subgroup C is tried against complements N enumerated as
/// descending chains of maximal subgroups of length log_p |C| (deduplicated);
/// C x N = G iff C meet N = 1. A central order-p element outside the Frattini
/// subgroup short-circuits the search (it always splits off a C_p factor).
/// Returns PurelyNonAbelian only after exhausting every C; returns
/// Inconclusive when the subgroup budget runs out.
PurityResult direct_factor_search(std::shared_ptr<const FiniteGroupView> G,
                                  const Subgroup& center_sub,
                                  const Subgroup& frattini_sub,
                                  std::uint64_t budget_subgroups = 100000);

}  // namespace pgroup

#endif  // PGROUP_ORACLE_HPP

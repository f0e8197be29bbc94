#ifndef PGROUP_ANALYSIS_HPP
#define PGROUP_ANALYSIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/abelian_type.hpp"
#include "pgroup/group_view.hpp"
#include "pgroup/oracle.hpp"
#include "pgroup/structure.hpp"
#include "pgroup/subgroup.hpp"

namespace pgroup {

/// Three-valued verdict. The tool never coerces an unestablished hypothesis
/// into true/false.
enum class Verdict : std::uint8_t { False = 0, True = 1, Unknown = 2 };

const char* to_string(Verdict v);

/// Structural data shared by all the formula and predicate computations.
/// Everything here is derived from the group alone (no brute force).
struct StructuralData {
  std::shared_ptr<const FiniteGroupView> group;
  Subgroup center_sub;
  Subgroup derived_sub;
  Subgroup derived_center_product;  // G'Z(G)
  Subgroup center_meet_derived;     // Z(G) meet G'
  Subgroup frattini_sub;
  std::uint32_t rank = 0;  // d(G)
  std::uint32_t nilpotence_class = 0;
  std::uint32_t coclass = 0;
  AbelianType center_type;
  AbelianType quot_derived_center_type;  // type of G/G'Z(G)
  AbelianType quot_derived_type;         // type of G/G'
  std::uint32_t z_inn_order = 0;         // |Z_2(G)/Z(G)|
  std::vector<std::uint32_t> upper_orders;  // |Z_1|, |Z_2|, ..., |G|
  std::vector<std::uint32_t> lower_orders;  // |gamma_1|, ..., 1
};

StructuralData compute_structure(std::shared_ptr<const FiniteGroupView> G);

/// |Autcent_Z(G)| = |Hom(G/G'Z(G), Z(G))| for non-abelian G.
/// Throws DomainError on abelian input.
std::uint64_t centz_order_formula(const StructuralData& s);

/// |Hom(G/G', Z(G))|, which equals |Autcent(G)| when G is purely non-abelian.
/// The caller pairs the value with the purity verdict; the formula is only
/// asserted under that hypothesis. Throws DomainError on abelian input.
std::uint64_t cent_order_formula(const StructuralData& s);

/// |Z(Inn(G))| = |Z_2(G)/Z(G)|; 1 for abelian groups.
std::uint64_t z_inn_order(const StructuralData& s);

/// The condition Z(Inn(G)) = Autcent_Z(G) < Autcent(G).
///
/// Equality is decided by order comparison, justified by the containment
/// Z(Inn(G)) <= Autcent_Z(G) (conjugation by a Z_2-element is central and
/// fixes the center pointwise). Strictness uses the brute-force |Autcent|
/// when oracle data is present; otherwise it falls back to the formula value,
/// which is only valid when the group is purely non-abelian, and reports
/// Unknown when that hypothesis is unestablished. If equality already fails,
/// the combined verdict is False regardless of strictness.
struct Condition1Verdict {
  bool applicable = false;  // false for abelian input
  Verdict equality = Verdict::Unknown;
  Verdict strict = Verdict::Unknown;
  Verdict combined = Verdict::Unknown;
  std::string note;
};

Condition1Verdict condition1_check(const StructuralData& s,
                                   std::uint64_t autcentz_order,
                                   std::optional<std::uint64_t> autcent_oracle,
                                   std::uint64_t autcent_formula,
                                   Verdict purely_nonabelian);

/// Expected condition-1 verdict from the order alone:
///   |G| <= p^6          -> expected False,
///   |G| =  p^7          -> expected (Z(G) of type [2] and |G'| = p^4 and
///                          class 4),
///   |G| >  p^7          -> no expectation.
/// `consistent` compares the expectation with the computed verdict; a
/// False result is a theorem violation.
struct TheoremRecord {
  std::string regime;  // "le_p6" | "eq_p7" | "gt_p7"
  Verdict expected = Verdict::Unknown;   // Unknown = no expectation
  Verdict computed = Verdict::Unknown;
  Verdict consistent = Verdict::Unknown; // Unknown when not decidable
};

TheoremRecord classify_theorems(const StructuralData& s,
                                const Condition1Verdict& cond);

/// One hypothesis/conclusion check. `applicable` is whether the hypothesis
/// holds for this group; `holds` is whether the conclusion does (Unknown when
/// it needs oracle data that was not computed). A record with applicable =
/// true and holds = False is a counterexample.
struct LemmaCheck {
  std::string key;
  bool applicable = false;
  Verdict holds = Verdict::Unknown;
  std::string detail;
};

/// The structural lemma battery for a non-abelian p-group:
///  - nc_quotient:   G' abelian  =>  G/G'Z(G) is not cyclic,
///  - coclass2:      coclass 2   =>  condition 1 fails,
///  - attar:         Autcent_Z(G) = Inn(G)  <=>  G' = Z(G) and Z(G) cyclic
///                   (left side via oracle count |Autcent_Z| = |G/Z| plus the
///                   containment Inn <= Autcent, which needs class <= 2),
///  - small_center:  Z(G) not contained in G' and class >= 3  =>  G is not of
///                   maximal class, |Z(G)| >= p^2 and |G| >= p^5.
std::vector<LemmaCheck> structural_lemma_checks(
    const StructuralData& s, const Condition1Verdict& cond,
    std::optional<std::uint64_t> autcentz_oracle);

/// Everything the tool computed for one group, ready for rendering.
struct AnalysisReport {
  std::string name;
  std::uint32_t prime = 0;
  std::uint64_t order = 0;
  std::uint32_t log_order = 0;
  bool abelian = false;
  AbelianType abelian_type;  // abelian groups only

  // Non-abelian groups only (the short form stops above).
  std::optional<StructuralData> structure;
  std::uint64_t autcentz_formula = 0;
  std::uint64_t autcent_formula = 0;
  Verdict autcent_formula_valid = Verdict::Unknown;
  PurityResult purity;
  std::optional<std::uint64_t> autcentz_oracle;
  std::optional<std::uint64_t> autcent_oracle;
  std::optional<bool> inner_center_embeds;
  Condition1Verdict condition1;
  TheoremRecord theorem;
  std::vector<LemmaCheck> lemmas;
  std::string oracle_note;  // non-empty when brute force was skipped
};

struct AnalysisOptions {
  std::uint64_t budget_homs = 10000;
  std::uint64_t budget_subgroups = 100000;
  std::uint64_t max_table_order = 4096;
  bool run_oracle = false;  // brute-force map enumeration
};

/// Full pipeline on a consistency-checked view.
AnalysisReport analyze_group(std::shared_ptr<const FiniteGroupView> view,
                             const AnalysisOptions& opts);

}  // namespace pgroup

#endif  // PGROUP_ANALYSIS_HPP

#ifndef PGROUP_GROUP_VIEW_HPP
#define PGROUP_GROUP_VIEW_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pgroup/abelian_type.hpp"
#include "pgroup/pc_presentation.hpp"

namespace pgroup {

class Subgroup;

/// Uniform finite p-group interface with two backings: a pc presentation (for
/// parsed input groups) or a bare multiplication table (for quotients and
/// synthesized abelian groups). Either way a full table is materialized, so
/// products are O(1); element ids are 0..order-1 with 0 the identity.
///
/// Instances are immutable after construction and safe to share across
/// concurrent readers.
class FiniteGroupView {
public:
  /// Builds the table by enumerating normal forms. The presentation must be
  /// consistent (run check_consistency first; this constructor assumes it).
  /// Table columns are chained through right-multiplication by generators,
  /// and identity/inverse/latin-square axioms are re-verified on the result.
  /// max_order caps the table size (memory is order^2 * 4 bytes).
  static FiniteGroupView from_presentation(
      std::shared_ptr<const PcPresentation> pc, std::uint64_t max_order = 4096);

  /// Wraps an explicit multiplication table. Verifies the group axioms:
  /// identity at id 0, two-sided inverses, latin-square rows/columns, and
  /// associativity (exhaustive up to order 300, else a deterministic
  /// 10^4-triple LCG sample). `generators` must generate the whole group.
  static FiniteGroupView from_table(std::string name, std::uint32_t prime,
                                    std::vector<std::uint32_t> table,
                                    std::vector<std::uint32_t> generators);

  /// Direct product of cyclic groups of orders p^e for e in `type`, as a
  /// table-backed view. Element ids are lexicographic over the coordinate
  /// tuples.
  static FiniteGroupView abelian_from_type(const AbelianType& type,
                                           const std::string& name);

  std::uint32_t order() const { return order_; }
  std::uint32_t prime() const { return prime_; }
  const std::string& name() const { return name_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  static constexpr std::uint32_t identity() { return 0; }

  /// a^k (k may be negative).
  std::uint32_t power(std::uint32_t a, std::int64_t k) const;
  /// a^-1 b^-1 a b.
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const {
    return mul(mul(inverse(a), inverse(b)), mul(a, b));
  }
  std::uint32_t conjugate(std::uint32_t a, std::uint32_t g) const {
    return mul(mul(inverse(g), a), g);
  }
  /// Smallest k >= 1 with a^k = identity.
  std::uint32_t element_order(std::uint32_t a) const { return elt_order_[a]; }

  /// A generating set (pc generators, or images of the parent's generators
  /// for quotients). Never includes the identity unless the group is trivial.
  std::span<const std::uint32_t> generators() const { return generators_; }

  bool is_abelian() const { return abelian_; }

  /// log_p(order).
  std::uint32_t log_order() const { return log_order_; }

  /// Pc backing if this view was built from a presentation, else null.
  const PcPresentation* presentation() const { return pc_.get(); }

  /// For quotient views: the group this is a quotient of, and the natural
  /// epimorphism (parent element id -> quotient element id). Null/empty
  /// otherwise. Kept so subgroups of the quotient can be pulled back.
  const std::shared_ptr<const FiniteGroupView>& parent() const { return parent_; }
  std::span<const std::uint32_t> epimorphism() const { return epi_; }

  /// Quotient of `G` by the normal subgroup N, as a table-backed view on the
  /// cosets. Coset ids are assigned by the minimal parent element id they
  /// contain, in increasing order, so the construction is deterministic.
  /// Throws DomainError if N is not normal in G.
  static FiniteGroupView quotient(std::shared_ptr<const FiniteGroupView> G,
                                  const Subgroup& N);

private:
  FiniteGroupView() = default;
  void finish_setup();  // inverses, orders, abelian flag, axiom checks

  std::string name_;
  std::uint32_t prime_ = 0;
  std::uint32_t order_ = 0;
  std::uint32_t log_order_ = 0;
  bool abelian_ = false;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> elt_order_;
  std::vector<std::uint32_t> generators_;
  std::shared_ptr<const PcPresentation> pc_;
  std::shared_ptr<const FiniteGroupView> parent_;
  std::vector<std::uint32_t> epi_;
};

}  // namespace pgroup

#endif  // PGROUP_GROUP_VIEW_HPP

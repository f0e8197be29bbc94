#ifndef PGROUP_SUBGROUP_HPP
#define PGROUP_SUBGROUP_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pgroup/errors.hpp"
#include "pgroup/group_view.hpp"

namespace pgroup {

/// A subgroup of a FiniteGroupView, materialized as the sorted set of its
/// element ids. Contains the identity and is closed under product and
/// inverse by construction. Immutable.
class Subgroup {
public:
  /// Closure of `gens` under product, by breadth-first orbit expansion in
  /// increasing id order (deterministic).
  static Subgroup closure(std::shared_ptr<const FiniteGroupView> parent,
                          std::span<const std::uint32_t> gens);

  static Subgroup trivial(std::shared_ptr<const FiniteGroupView> parent);
  static Subgroup whole_group(std::shared_ptr<const FiniteGroupView> parent);

  /// Wraps an already-closed member set (sorted, deduplicated). Verifies
  /// closure under product and presence of the identity.
  static Subgroup from_members(std::shared_ptr<const FiniteGroupView> parent,
                               std::vector<std::uint32_t> members);

  const std::shared_ptr<const FiniteGroupView>& parent() const { return parent_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(members_.size()); }
  bool contains(std::uint32_t id) const { return mask_[id]; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole_group() const { return members_.size() == parent_->order(); }

  /// The generating set this subgroup was built from (useful for conjugation
  /// and Frattini computations); whole member list if unknown.
  const std::vector<std::uint32_t>& generators() const { return gens_; }

  bool is_abelian() const;
  bool is_normal() const;
  bool is_cyclic() const;

  /// true iff every member commutes with every member of `other`.
  bool centralizes(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

private:
  Subgroup(std::shared_ptr<const FiniteGroupView> parent,
           std::vector<std::uint32_t> members, std::vector<std::uint32_t> gens);

  std::shared_ptr<const FiniteGroupView> parent_;
  std::vector<std::uint32_t> members_;  // sorted
  std::vector<bool> mask_;              // size = parent order
  std::vector<std::uint32_t> gens_;
};

/// Complex product AB = {ab : a in A, b in B}. At least one factor must be
/// normal in the parent so that AB is a subgroup; if the result is not closed
/// a DomainError reports the precondition violation.
Subgroup subgroup_product(const Subgroup& a, const Subgroup& b);

/// Set intersection; always a subgroup.
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);

}  // namespace pgroup

#endif  // PGROUP_SUBGROUP_HPP

#ifndef PGROUP_HOM_HPP
#define PGROUP_HOM_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "pgroup/abelian_type.hpp"
#include "pgroup/group_view.hpp"
#include "pgroup/subgroup.hpp"

namespace pgroup {

/// Explicit decomposition of a finite abelian p-group into a direct product
/// of cyclic subgroups, with coordinates precomputed for every element so
/// homomorphism evaluation needs no discrete logs.
///
/// The basis is extracted greedily: repeatedly take the element of maximal
/// order that is independent of the span so far (ties broken by least element
/// id). The resulting order list must match abelian_invariants of the group;
/// this is verified at construction.
class AbelianBasis {
public:
  explicit AbelianBasis(std::shared_ptr<const FiniteGroupView> A);

  const std::shared_ptr<const FiniteGroupView>& group() const { return group_; }
  /// Basis element ids, orders non-increasing.
  const std::vector<std::uint32_t>& elements() const { return elements_; }
  /// orders[i] = p^{e_i}; matches the abelian type of the group.
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  const AbelianType& type() const { return type_; }

  /// Coordinates of an element: x = prod basis[i]^coords[i], 0 <= coords[i] <
  /// orders[i].
  const std::vector<std::uint32_t>& coordinates(std::uint32_t id) const {
    return coords_[id];
  }

private:
  std::shared_ptr<const FiniteGroupView> group_;
  std::vector<std::uint32_t> elements_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::vector<std::uint32_t>> coords_;
  AbelianType type_;
};

/// One homomorphism from a based abelian group into an abelian subgroup B of
/// some group: the tuple of images of the basis elements (ids in B's parent).
/// Evaluation multiplies the images according to the argument's coordinates.
struct HomDescriptor {
  std::vector<std::uint32_t> images;

  std::uint32_t evaluate(const AbelianBasis& basis, const FiniteGroupView& target,
                         std::uint32_t domain_id) const {
    const auto& c = basis.coordinates(domain_id);
    std::uint32_t out = FiniteGroupView::identity();
    for (std::size_t i = 0; i < images.size(); ++i)
      out = target.mul(out, target.power(images[i], c[i]));
    return out;
  }
};

/// All homomorphisms from the based group A into the abelian subgroup B: one
/// descriptor per assignment of basis images z with z^{order(basis_i)} = 1.
/// Descriptors are emitted in lexicographic image order (deterministic).
/// Throws BudgetExceeded if the count would exceed `budget`; throws
/// DomainError if B is not abelian or the primes differ.
std::vector<HomDescriptor> enumerate_homs(const AbelianBasis& A,
                                          const Subgroup& B,
                                          std::uint64_t budget = 10000);

/// Independent count of |Hom(A, B)| from a concrete target group: for each
/// cyclic factor C_{p^{a_i}} of A, exhaustively count the elements of B whose
/// p^{a_i}-th power is the identity (computed by actual powering in B), and
/// multiply. Used as the oracle against the min-formula hom_order.
std::uint64_t hom_count_scan(const AbelianType& A, const Subgroup& B);

}  // namespace pgroup

#endif  // PGROUP_HOM_HPP

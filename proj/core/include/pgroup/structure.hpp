#ifndef PGROUP_STRUCTURE_HPP
#define PGROUP_STRUCTURE_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "pgroup/abelian_type.hpp"
#include "pgroup/group_view.hpp"
#include "pgroup/subgroup.hpp"

namespace pgroup {

/// Z(G) = {g : gx = xg for every generator x}.
Subgroup center(std::shared_ptr<const FiniteGroupView> G);

/// G' = closure of the generator commutators under products and conjugation
/// by generators.
Subgroup derived_subgroup(std::shared_ptr<const FiniteGroupView> G);

/// Lower central series gamma_1 = G, gamma_{i+1} = [gamma_i, G], strictly
/// descending, returned up to and including the first trivial term. The
/// nilpotence class is the number of nontrivial terms. Throws DomainError if
/// the series stabilizes above the identity (impossible for a genuine
/// p-group; signals table corruption).
std::vector<Subgroup> lower_central_series(std::shared_ptr<const FiniteGroupView> G);

/// Upper central series Z_1 = Z(G), Z_{i+1} = preimage of Z(G/Z_i), returned
/// ascending up to and including G itself; its length equals the class.
std::vector<Subgroup> upper_central_series(std::shared_ptr<const FiniteGroupView> G);

std::uint32_t nilpotence_class(std::shared_ptr<const FiniteGroupView> G);

/// Frattini subgroup Phi(G) = G' * G^p together with d(G) = log_p |G/Phi(G)|,
/// the minimal number of generators.
std::pair<Subgroup, std::uint32_t> frattini_and_rank(
    std::shared_ptr<const FiniteGroupView> G);

/// Exponent multiset of a finite abelian p-group, recovered from the order
/// statistics c_k = #{a : a^(p^k) = 1}: the number of exponents >= k equals
/// log_p c_k - log_p c_{k-1}. Throws DomainError if the input is not abelian.
AbelianType abelian_invariants(const FiniteGroupView& A);
AbelianType abelian_invariants(const Subgroup& A);

/// Cyclic subgroup generated by one element.
Subgroup cyclic_subgroup(std::shared_ptr<const FiniteGroupView> G,
                         std::uint32_t g);

/// Pullback of a subgroup of a quotient view through the retained natural
/// epimorphism: {x in parent : epi(x) in S}.
Subgroup pullback(const Subgroup& S_of_quotient);

/// Elements of S of order dividing p (the subgroup Omega_1(S) when S is
/// abelian; used for Z(G), which is).
Subgroup omega1(const Subgroup& S);

}  // namespace pgroup

#endif  // PGROUP_STRUCTURE_HPP

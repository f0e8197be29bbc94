#include "pgroup/subgroup.hpp"

#include <algorithm>

namespace pgroup {

Subgroup::Subgroup(std::shared_ptr<const FiniteGroupView> parent,
                   std::vector<std::uint32_t> members,
                   std::vector<std::uint32_t> gens)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      gens_(std::move(gens)) {
  mask_.assign(parent_->order(), false);
  for (auto m : members_) mask_[m] = true;
}

Subgroup Subgroup::closure(std::shared_ptr<const FiniteGroupView> parent,
                           std::span<const std::uint32_t> gens) {
  const FiniteGroupView& G = *parent;
  std::vector<bool> in(G.order(), false);
  in[0] = true;
  std::vector<std::uint32_t> sorted_gens(gens.begin(), gens.end());
  std::sort(sorted_gens.begin(), sorted_gens.end());
  sorted_gens.erase(std::unique(sorted_gens.begin(), sorted_gens.end()),
                    sorted_gens.end());
  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier)
      for (auto g : sorted_gens) {
        std::uint32_t y = G.mul(x, g);
        if (!in[y]) {
          in[y] = true;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < G.order(); ++x)
    if (in[x]) members.push_back(x);
  if (!sorted_gens.empty() && sorted_gens[0] == 0)
    sorted_gens.erase(sorted_gens.begin());
  return Subgroup(std::move(parent), std::move(members), std::move(sorted_gens));
}

Subgroup Subgroup::trivial(std::shared_ptr<const FiniteGroupView> parent) {
  return Subgroup(std::move(parent), {0}, {});
}

Subgroup Subgroup::whole_group(std::shared_ptr<const FiniteGroupView> parent) {
  std::vector<std::uint32_t> all(parent->order());
  for (std::uint32_t i = 0; i < parent->order(); ++i) all[i] = i;
  auto gens = std::vector<std::uint32_t>(parent->generators().begin(),
                                         parent->generators().end());
  return Subgroup(std::move(parent), std::move(all), std::move(gens));
}

Subgroup Subgroup::from_members(std::shared_ptr<const FiniteGroupView> parent,
                                std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] != 0)
    throw DomainError("subgroup must contain the identity");
  const FiniteGroupView& G = *parent;
  std::vector<bool> in(G.order(), false);
  for (auto m : members) {
    if (m >= G.order()) throw DomainError("subgroup member out of range");
    in[m] = true;
  }
  for (auto a : members)
    for (auto b : members)
      if (!in[G.mul(a, b)])
        throw DomainError("member set is not closed under product");
  std::vector<std::uint32_t> gens(members.begin(), members.end());
  gens.erase(gens.begin());  // drop identity
  return Subgroup(std::move(parent), std::move(members), std::move(gens));
}

bool Subgroup::is_abelian() const {
  const FiniteGroupView& G = *parent_;
  for (auto a : members_)
    for (auto b : members_) {
      if (b >= a) break;  // commuting is symmetric
      if (G.mul(a, b) != G.mul(b, a)) return false;
    }
  return true;
}

bool Subgroup::is_normal() const {
  const FiniteGroupView& G = *parent_;
  for (auto g : G.generators())
    for (auto m : members_)
      if (!mask_[G.conjugate(m, g)]) return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  const FiniteGroupView& G = *parent_;
  for (auto m : members_)
    if (G.element_order(m) == order()) return true;
  return false;
}

bool Subgroup::centralizes(const Subgroup& other) const {
  const FiniteGroupView& G = *parent_;
  for (auto a : members_)
    for (auto b : other.members())
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

Subgroup subgroup_product(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent())
    throw DomainError("subgroup_product: different parent groups");
  const FiniteGroupView& G = *a.parent();
  std::vector<bool> in(G.order(), false);
  std::vector<std::uint32_t> members;
  for (auto x : a.members())
    for (auto y : b.members()) {
      std::uint32_t xy = G.mul(x, y);
      if (!in[xy]) {
        in[xy] = true;
        members.push_back(xy);
      }
    }
  std::sort(members.begin(), members.end());
  for (auto x : members)
    for (auto y : members)
      if (!in[G.mul(x, y)])
        throw DomainError(
            "subgroup_product: AB is not a subgroup (neither factor normal?)");
  // |AB| * |A meet B| = |A| * |B| holds for the complex product; cheap sanity.
  const std::uint64_t meet =
      static_cast<std::uint64_t>(a.order()) * b.order() / members.size();
  if (meet * members.size() != static_cast<std::uint64_t>(a.order()) * b.order())
    throw DomainError("subgroup_product: order arithmetic is inconsistent");
  return Subgroup::from_members(a.parent(), std::move(members));
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent())
    throw DomainError("subgroup_intersection: different parent groups");
  std::vector<std::uint32_t> members;
  for (auto x : a.members())
    if (b.contains(x)) members.push_back(x);
  return Subgroup::from_members(a.parent(), std::move(members));
}

}  // namespace pgroup

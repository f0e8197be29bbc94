#include "pgroup/structure.hpp"

#include <algorithm>

namespace pgroup {

Subgroup center(std::shared_ptr<const FiniteGroupView> G) {
  const FiniteGroupView& g = *G;
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto gen : g.generators())
      if (g.mul(x, gen) != g.mul(gen, x)) {
        central = false;
        break;
      }
    if (central) members.push_back(x);
  }
  return Subgroup::from_members(std::move(G), std::move(members));
}

Subgroup derived_subgroup(std::shared_ptr<const FiniteGroupView> G) {
  const FiniteGroupView& g = *G;
  std::vector<std::uint32_t> seeds;
  for (auto a : g.generators())
    for (auto b : g.generators()) {
      std::uint32_t c = g.commutator(a, b);
      if (c != 0) seeds.push_back(c);
    }
  // Close under products (Subgroup::closure) and conjugation by generators;
  // conjugation can leave the current span, so iterate to a fixed point.
  for (;;) {
    Subgroup current = Subgroup::closure(G, seeds);
    std::vector<std::uint32_t> extra;
    for (auto m : current.members())
      for (auto gen : g.generators()) {
        std::uint32_t c = g.conjugate(m, gen);
        if (!current.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) return current;
    seeds = current.members();
    seeds.insert(seeds.end(), extra.begin(), extra.end());
  }
}

namespace {

// [S, G]: normal closure of the commutators of S-members with generators.
Subgroup commutator_with_group(const Subgroup& S,
                               std::shared_ptr<const FiniteGroupView> G) {
  const FiniteGroupView& g = *G;
  std::vector<std::uint32_t> seeds;
  for (auto m : S.members())
    for (auto gen : g.generators()) {
      std::uint32_t c = g.commutator(m, gen);
      if (c != 0) seeds.push_back(c);
    }
  for (;;) {
    Subgroup current = Subgroup::closure(G, seeds);
    std::vector<std::uint32_t> extra;
    for (auto m : current.members())
      for (auto gen : g.generators()) {
        std::uint32_t c = g.conjugate(m, gen);
        if (!current.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) return current;
    seeds = current.members();
    seeds.insert(seeds.end(), extra.begin(), extra.end());
  }
}

}  // namespace

std::vector<Subgroup> lower_central_series(
    std::shared_ptr<const FiniteGroupView> G) {
  std::vector<Subgroup> series;
  series.push_back(Subgroup::whole_group(G));
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_with_group(series.back(), G);
    if (next.order() >= series.back().order())
      throw DomainError("group '" + G->name() +
                        "': lower central series does not descend (input not "
                        "nilpotent / corrupt table)");
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> upper_central_series(
    std::shared_ptr<const FiniteGroupView> G) {
  std::vector<Subgroup> series;
  series.push_back(center(G));
  while (!series.back().is_whole_group()) {
    // Z_{i+1} = preimage of Z(G / Z_i) through the quotient's epimorphism.
    auto quot = std::make_shared<const FiniteGroupView>(
        FiniteGroupView::quotient(G, series.back()));
    Subgroup zq = center(quot);
    Subgroup next = pullback(zq);
    if (next.order() <= series.back().order())
      throw DomainError("group '" + G->name() +
                        "': upper central series does not ascend (input not "
                        "nilpotent / corrupt table)");
    series.push_back(std::move(next));
  }
  return series;
}

std::uint32_t nilpotence_class(std::shared_ptr<const FiniteGroupView> G) {
  return static_cast<std::uint32_t>(lower_central_series(std::move(G)).size() - 1);
}

std::pair<Subgroup, std::uint32_t> frattini_and_rank(
    std::shared_ptr<const FiniteGroupView> G) {
  const FiniteGroupView& g = *G;
  Subgroup derived = derived_subgroup(G);
  std::vector<std::uint32_t> seeds = derived.members();
  // Phi(G)/G' = (G/G')^p is generated by the p-th powers of the generators
  // (G/G' is abelian).
  for (auto gen : g.generators())
    seeds.push_back(g.power(gen, g.prime()));
  Subgroup phi = Subgroup::closure(G, seeds);
  std::uint32_t index = g.order() / phi.order();
  std::uint32_t d = 0;
  while (index > 1) {
    index /= g.prime();
    ++d;
  }
  return {std::move(phi), d};
}

namespace {

AbelianType invariants_from_orders(const FiniteGroupView& parent,
                                   const std::vector<std::uint32_t>& members,
                                   const std::string& what) {
  const std::uint32_t p = parent.prime();
  // c[k] = number of elements of order dividing p^k.
  std::vector<std::uint64_t> c{1};
  for (;;) {
    std::uint64_t pk = checked_pow(p, static_cast<std::uint32_t>(c.size()));
    std::uint64_t count = 0;
    for (auto m : members)
      if (parent.element_order(m) <= pk) ++count;
    c.push_back(count);
    if (count == members.size()) break;
  }
  auto log_p = [&](std::uint64_t v) {
    std::uint32_t k = 0;
    while (v > 1) {
      if (v % p != 0)
        throw DomainError(what + ": order statistics are not p-powers");
      v /= p;
      ++k;
    }
    return k;
  };
  // Number of exponents >= k.
  std::vector<std::uint32_t> ge;
  for (std::size_t k = 1; k < c.size(); ++k)
    ge.push_back(log_p(c[k]) - log_p(c[k - 1]));
  std::vector<std::uint32_t> exps;
  for (std::uint32_t k = static_cast<std::uint32_t>(ge.size()); k >= 1; --k) {
    std::uint32_t here = ge[k - 1];
    std::uint32_t above = k < ge.size() ? ge[k] : 0;
    for (std::uint32_t i = above; i < here; ++i) exps.push_back(k);
  }
  std::sort(exps.begin(), exps.end(), std::greater<>());
  return AbelianType(p, std::move(exps));
}

}  // namespace

AbelianType abelian_invariants(const FiniteGroupView& A) {
  if (!A.is_abelian())
    throw DomainError("abelian_invariants: group '" + A.name() +
                      "' is not abelian");
  std::vector<std::uint32_t> members(A.order());
  for (std::uint32_t i = 0; i < A.order(); ++i) members[i] = i;
  return invariants_from_orders(A, members, "group '" + A.name() + "'");
}

AbelianType abelian_invariants(const Subgroup& A) {
  if (!A.is_abelian())
    throw DomainError("abelian_invariants: subgroup is not abelian");
  return invariants_from_orders(*A.parent(), A.members(), "subgroup");
}

Subgroup cyclic_subgroup(std::shared_ptr<const FiniteGroupView> G,
                         std::uint32_t g) {
  std::uint32_t gens[1] = {g};
  return Subgroup::closure(std::move(G), gens);
}

Subgroup pullback(const Subgroup& S_of_quotient) {
  const auto& quot = *S_of_quotient.parent();
  const auto& parent = quot.parent();
  if (!parent)
    throw DomainError("pullback: the subgroup's parent is not a quotient view");
  auto epi = quot.epimorphism();
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < parent->order(); ++x)
    if (S_of_quotient.contains(epi[x])) members.push_back(x);
  return Subgroup::from_members(parent, std::move(members));
}

Subgroup omega1(const Subgroup& S) {
  const FiniteGroupView& g = *S.parent();
  std::vector<std::uint32_t> members;
  for (auto m : S.members())
    if (g.element_order(m) <= g.prime()) members.push_back(m);
  return Subgroup::from_members(S.parent(), std::move(members));
}

}  // namespace pgroup

#include "pgroup/hom.hpp"

#include <algorithm>
#include <map>

#include "pgroup/structure.hpp"

namespace pgroup {

AbelianBasis::AbelianBasis(std::shared_ptr<const FiniteGroupView> A)
    : group_(std::move(A)) {
  const FiniteGroupView& g = *group_;
  if (!g.is_abelian())
    throw DomainError("AbelianBasis: group '" + g.name() + "' is not abelian");

  // span: element id -> coordinates over the chosen basis so far.
  std::map<std::uint32_t, std::vector<std::uint32_t>> span;
  span[0] = {};

  // Candidates by (order desc, id asc): the greedy order that realizes the
  // invariant-factor decomposition.
  std::vector<std::uint32_t> candidates(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) candidates[i] = i;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return g.element_order(a) > g.element_order(b);
                   });

  while (span.size() < g.order()) {
    bool advanced = false;
    for (auto x : candidates) {
      if (span.count(x)) continue;
      const std::uint32_t ord = g.element_order(x);
      // Independence: <span, x> must have size |span| * ord, i.e. the powers
      // of x meet the span only at the identity.
      bool independent = true;
      std::uint32_t xp = x;
      for (std::uint32_t t = 1; t < ord; ++t) {
        if (span.count(xp)) {
          independent = false;
          break;
        }
        xp = g.mul(xp, x);
      }
      if (!independent) continue;

      std::map<std::uint32_t, std::vector<std::uint32_t>> grown;
      for (const auto& [s, c] : span) {
        std::uint32_t sx = s;
        for (std::uint32_t t = 0; t < ord; ++t) {
          auto coords = c;
          coords.push_back(t);
          grown.emplace(sx, std::move(coords));
          sx = g.mul(sx, x);
        }
      }
      if (grown.size() != span.size() * static_cast<std::size_t>(ord))
        throw DomainError("AbelianBasis: span growth is not direct");
      span = std::move(grown);
      elements_.push_back(x);
      orders_.push_back(ord);
      advanced = true;
      break;
    }
    if (!advanced)
      throw DomainError("AbelianBasis: no independent element found before the "
                        "span filled the group");
  }

  coords_.assign(g.order(), {});
  for (auto& [id, c] : span) coords_[id] = std::move(c);

  std::vector<std::uint32_t> exps;
  for (auto o : orders_) {
    std::uint32_t e = 0;
    std::uint32_t v = o;
    while (v > 1) {
      v /= g.prime();
      ++e;
    }
    exps.push_back(e);
  }
  type_ = AbelianType(g.prime(), exps);
  if (type_ != abelian_invariants(g))
    throw DomainError("AbelianBasis: basis orders " + type_.to_string() +
                      " disagree with the abelian invariants " +
                      abelian_invariants(g).to_string());
}

std::vector<HomDescriptor> enumerate_homs(const AbelianBasis& A,
                                          const Subgroup& B,
                                          std::uint64_t budget) {
  const FiniteGroupView& target = *B.parent();
  if (!B.is_abelian())
    throw DomainError("enumerate_homs: target subgroup is not abelian");
  if (A.group()->order() > 1 && A.group()->prime() != target.prime())
    throw DomainError("enumerate_homs: prime mismatch");

  // Per basis element: the members z of B with z^{order_i} = identity, in
  // increasing id order.
  std::vector<std::vector<std::uint32_t>> choices;
  std::uint64_t total = 1;
  for (auto ord : A.orders()) {
    std::vector<std::uint32_t> ok;
    for (auto z : B.members())
      if (target.power(z, ord) == FiniteGroupView::identity()) ok.push_back(z);
    total *= ok.size();
    if (total > budget)
      throw BudgetExceeded("enumerate_homs: too many homomorphisms", total,
                           budget);
    choices.push_back(std::move(ok));
  }

  std::vector<HomDescriptor> out;
  out.reserve(total);
  std::vector<std::size_t> odo(choices.size(), 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    HomDescriptor d;
    d.images.resize(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i)
      d.images[i] = choices[i][odo[i]];
    out.push_back(std::move(d));
    for (std::size_t i = choices.size(); i > 0; --i) {
      if (++odo[i - 1] < choices[i - 1].size()) break;
      odo[i - 1] = 0;
    }
  }
  return out;
}

std::uint64_t hom_count_scan(const AbelianType& A, const Subgroup& B) {
  const FiniteGroupView& target = *B.parent();
  if (!B.is_abelian())
    throw DomainError("hom_count_scan: target subgroup is not abelian");
  std::uint64_t total = 1;
  for (auto e : A.exponents()) {
    const std::uint64_t pe = checked_pow(A.prime(), e);
    std::uint64_t count = 0;
    for (auto z : B.members()) {
      std::uint32_t zp = FiniteGroupView::identity();
      for (std::uint64_t t = 0; t < pe; ++t) zp = target.mul(zp, z);
      if (zp == FiniteGroupView::identity()) ++count;
    }
    if (count != 0 && total > UINT64_MAX / count)
      throw DomainError("hom_count_scan overflows");
    total *= count;
  }
  return total;
}

}  // namespace pgroup

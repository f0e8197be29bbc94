#include "pgroup/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pgroup/structure.hpp"

namespace pgroup {

CentralMapSet::CentralMapSet(std::shared_ptr<const FiniteGroupView> G,
                             std::uint64_t budget_homs)
    : group_(std::move(G)) {
  const FiniteGroupView& g = *group_;
  if (g.is_abelian())
    throw DomainError("central map enumeration requires a non-abelian group");

  Subgroup z = center(group_);
  Subgroup derived = derived_subgroup(group_);
  quot_ = std::make_shared<const FiniteGroupView>(
      FiniteGroupView::quotient(group_, derived));
  basis_ = std::make_unique<AbelianBasis>(quot_);

  std::vector<HomDescriptor> homs = enumerate_homs(*basis_, z, budget_homs);
  auto epi = quot_->epimorphism();

  maps_.reserve(homs.size());
  std::vector<bool> hit(g.order());
  for (auto& h : homs) {
    CentralMap m;
    m.coset_value.resize(quot_->order());
    for (std::uint32_t c = 0; c < quot_->order(); ++c)
      m.coset_value[c] = h.evaluate(*basis_, g, c);
    m.hom = std::move(h);

    // alpha(x) = x f(xG') is an endomorphism because f lands in the center
    // and kills G'; spot-check the homomorphism law anyway on generator pairs.
    for (auto a : g.generators())
      for (auto b : g.generators()) {
        std::uint32_t ab = g.mul(a, b);
        std::uint32_t lhs = m.evaluate(g, epi, ab);
        std::uint32_t rhs = g.mul(m.evaluate(g, epi, a), m.evaluate(g, epi, b));
        if (lhs != rhs)
          throw DomainError("central map candidate is not an endomorphism");
      }

    std::fill(hit.begin(), hit.end(), false);
    bool bij = true;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      std::uint32_t y = m.evaluate(g, epi, x);
      if (hit[y]) {
        bij = false;
        break;
      }
      hit[y] = true;
    }
    m.bijective = bij;

    m.fixes_center = true;
    for (auto zc : z.members())
      if (m.evaluate(g, epi, zc) != zc) {
        m.fixes_center = false;
        break;
      }

    m.gen_images.reserve(g.generators().size());
    for (auto gen : g.generators()) m.gen_images.push_back(m.evaluate(g, epi, gen));

    maps_.push_back(std::move(m));
  }
}

std::uint64_t CentralMapSet::autcent_count() const {
  std::uint64_t n = 0;
  for (const auto& m : maps_) n += m.bijective;
  return n;
}

std::uint64_t CentralMapSet::autcentz_count() const {
  std::uint64_t n = 0;
  for (const auto& m : maps_) n += m.bijective && m.fixes_center;
  return n;
}

std::optional<std::size_t> CentralMapSet::find_by_gen_images(
    const std::vector<std::uint32_t>& gen_images) const {
  for (std::size_t i = 0; i < maps_.size(); ++i)
    if (maps_[i].gen_images == gen_images) return i;
  return std::nullopt;
}

std::uint64_t autcent_bruteforce(const CentralMapSet& maps) {
  return maps.autcent_count();
}

std::uint64_t autcentz_bruteforce(const CentralMapSet& maps) {
  return maps.autcentz_count();
}

InnerCenterCheck inner_center_check(const CentralMapSet& maps,
                                    const Subgroup& second_center) {
  const FiniteGroupView& g = *maps.group();
  InnerCenterCheck result;
  result.embeds = true;

  std::set<std::vector<std::uint32_t>> distinct;
  for (auto z2 : second_center.members()) {
    std::vector<std::uint32_t> gen_images;
    gen_images.reserve(g.generators().size());
    for (auto gen : g.generators()) gen_images.push_back(g.conjugate(gen, z2));
    auto idx = maps.find_by_gen_images(gen_images);
    if (!idx || !maps.maps()[*idx].bijective || !maps.maps()[*idx].fixes_center)
      result.embeds = false;
    distinct.insert(std::move(gen_images));
  }
  result.distinct_inner_maps = distinct.size();

  const std::uint64_t expected =
      second_center.order() / center(maps.group()).order();
  if (result.distinct_inner_maps != expected) result.embeds = false;
  return result;
}

namespace {

// Maximal subgroups of H (index p), as subgroups of the ambient group: the
// preimages of the hyperplanes of H/Phi(H).
std::vector<Subgroup> maximal_subgroups(const Subgroup& H,
                                        std::uint64_t& visited,
                                        std::uint64_t budget) {
  const auto& parent = H.parent();
  const FiniteGroupView& g = *parent;
  const std::uint32_t p = g.prime();

  // Phi(H) = H' * H^p, computed inside the ambient group from H's generators.
  std::vector<std::uint32_t> seeds;
  const auto& hgens = H.generators();
  for (auto a : hgens)
    for (auto b : hgens) {
      std::uint32_t c = g.commutator(a, b);
      if (c != 0) seeds.push_back(c);
    }
  for (auto a : hgens) seeds.push_back(g.power(a, p));
  // Close the derived part under conjugation by H-generators.
  for (;;) {
    Subgroup cur = Subgroup::closure(parent, seeds);
    std::vector<std::uint32_t> extra;
    for (auto m : cur.members())
      for (auto a : hgens) {
        std::uint32_t c = g.conjugate(m, a);
        if (!cur.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) break;
    seeds = cur.members();
    seeds.insert(seeds.end(), extra.begin(), extra.end());
  }
  Subgroup phi = Subgroup::closure(parent, seeds);

  // Independent coset representatives of H modulo Phi(H): a basis of the
  // elementary abelian quotient.
  std::vector<std::uint32_t> basis;
  {
    Subgroup span = phi;
    for (auto m : H.members()) {
      if (span.contains(m)) continue;
      std::vector<std::uint32_t> s = span.members();
      s.push_back(m);
      span = Subgroup::closure(parent, s);
      basis.push_back(m);
      if (span.order() == H.order()) break;
    }
  }
  const std::uint32_t d = static_cast<std::uint32_t>(basis.size());

  // One maximal subgroup per hyperplane: normal vectors (a_1..a_d) over F_p
  // up to scalar, normalized so the first nonzero entry is 1. The kernel is
  // spanned by d-1 explicit combinations of the basis.
  std::vector<Subgroup> out;
  std::vector<std::uint32_t> normal(d, 0);
  auto advance = [&]() {
    for (std::size_t i = d; i > 0; --i) {
      if (++normal[i - 1] < p) return true;
      normal[i - 1] = 0;
    }
    return false;
  };
  while (advance()) {
    std::size_t lead = 0;
    while (lead < d && normal[lead] == 0) ++lead;
    if (normal[lead] != 1) continue;  // scalar-normalized representatives only

    std::vector<std::uint32_t> gens = phi.members();
    for (std::size_t i = 0; i < d; ++i) {
      if (i == lead) continue;
      // basis[i] * basis[lead]^{-normal[i]} lies in the hyperplane.
      std::int64_t k = -static_cast<std::int64_t>(normal[i]);
      gens.push_back(g.mul(basis[i], g.power(basis[lead], k)));
    }
    Subgroup m = Subgroup::closure(parent, gens);
    if (++visited > budget)
      throw BudgetExceeded("direct factor search: subgroup enumeration budget",
                           visited, budget);
    if (m.order() * p == H.order()) out.push_back(std::move(m));
  }
  return out;
}

// Depth-first over descending chains of maximal subgroups, deduplicating by
// member set. Returns true when a complement of C was found.
bool complement_search(const Subgroup& H, const Subgroup& C,
                       std::uint32_t depth,
                       std::set<std::vector<std::uint32_t>>& seen,
                       std::uint64_t& visited, std::uint64_t budget,
                       Subgroup* out) {
  if (depth == 0) {
    if (subgroup_intersection(C, H).is_trivial()) {
      *out = H;
      return true;
    }
    return false;
  }
  for (auto& m : maximal_subgroups(H, visited, budget)) {
    if (!seen.insert(m.members()).second) continue;
    // C must survive into some complement below m.
    if (complement_search(m, C, depth - 1, seen, visited, budget, out))
      return true;
  }
  return false;
}

}  // namespace

PurityResult direct_factor_search(std::shared_ptr<const FiniteGroupView> G,
                                  const Subgroup& center_sub,
                                  const Subgroup& frattini_sub,
                                  std::uint64_t budget_subgroups) {
  const FiniteGroupView& g = *G;
  PurityResult result;

  // Fast filter: a central element of order p outside Phi(G) splits off a
  // C_p factor immediately (some maximal subgroup avoids it).
  const Subgroup center_omega1 = omega1(center_sub);
  for (auto z : center_omega1.members()) {
    if (z == 0 || frattini_sub.contains(z)) continue;
    std::uint64_t visited = 0;
    Subgroup whole = Subgroup::whole_group(G);
    for (auto& m :
         maximal_subgroups(whole, visited, budget_subgroups)) {
      if (!m.contains(z)) {
        result.verdict = Purity::FactorFound;
        result.note = "central order-p element outside the Frattini subgroup";
        result.factor_c = cyclic_subgroup(G, z).members();
        result.factor_n = m.members();
        result.subgroups_visited = visited;
        return result;
      }
    }
  }

  // Full search over nontrivial cyclic central subgroups, smallest first.
  std::set<std::vector<std::uint32_t>> cyclic_seen;
  std::vector<Subgroup> candidates;
  for (auto z : center_sub.members()) {
    if (z == 0) continue;
    Subgroup c = cyclic_subgroup(G, z);
    if (cyclic_seen.insert(c.members()).second) candidates.push_back(std::move(c));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Subgroup& a, const Subgroup& b) {
                     return a.order() < b.order();
                   });

  std::uint64_t visited = 0;
  for (const auto& c : candidates) {
    std::uint32_t depth = 0;
    for (std::uint32_t v = c.order(); v > 1; v /= g.prime()) ++depth;
    std::set<std::vector<std::uint32_t>> seen;
    Subgroup complement = Subgroup::trivial(G);
    try {
      Subgroup whole = Subgroup::whole_group(G);
      if (complement_search(whole, c, depth, seen, visited, budget_subgroups,
                            &complement)) {
        result.verdict = Purity::FactorFound;
        result.note = "cyclic central factor of order " + std::to_string(c.order());
        result.factor_c = c.members();
        result.factor_n = complement.members();
        result.subgroups_visited = visited;
        return result;
      }
    } catch (const BudgetExceeded&) {
      result.verdict = Purity::Inconclusive;
      result.note = "subgroup enumeration budget exceeded";
      result.subgroups_visited = visited;
      return result;
    }
  }

  result.verdict = Purity::PurelyNonAbelian;
  result.note = "no cyclic central subgroup has a complement";
  result.subgroups_visited = visited;
  return result;
}

}  // namespace pgroup

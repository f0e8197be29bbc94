#include "pgroup/analysis.hpp"

#include <algorithm>

namespace pgroup {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    default: return "unknown";
  }
}

StructuralData compute_structure(std::shared_ptr<const FiniteGroupView> G) {
  StructuralData s{.group = G,
                   .center_sub = center(G),
                   .derived_sub = derived_subgroup(G),
                   .derived_center_product = Subgroup::trivial(G),
                   .center_meet_derived = Subgroup::trivial(G),
                   .frattini_sub = Subgroup::trivial(G)};
  s.derived_center_product = subgroup_product(s.derived_sub, s.center_sub);
  s.center_meet_derived = subgroup_intersection(s.center_sub, s.derived_sub);
  auto [phi, d] = frattini_and_rank(G);
  s.frattini_sub = std::move(phi);
  s.rank = d;

  auto lower = lower_central_series(G);
  s.nilpotence_class = static_cast<std::uint32_t>(lower.size() - 1);
  for (auto& t : lower) s.lower_orders.push_back(t.order());
  auto upper = upper_central_series(G);
  for (auto& t : upper) s.upper_orders.push_back(t.order());
  s.coclass = G->log_order() - s.nilpotence_class;

  s.center_type = abelian_invariants(s.center_sub);
  {
    auto q = std::make_shared<const FiniteGroupView>(
        FiniteGroupView::quotient(G, s.derived_center_product));
    s.quot_derived_center_type = abelian_invariants(*q);
  }
  {
    auto q = std::make_shared<const FiniteGroupView>(
        FiniteGroupView::quotient(G, s.derived_sub));
    s.quot_derived_type = abelian_invariants(*q);
  }
  s.z_inn_order = s.upper_orders.size() >= 2
                      ? s.upper_orders[1] / s.upper_orders[0]
                      : 1;
  return s;
}

std::uint64_t centz_order_formula(const StructuralData& s) {
  if (s.group->is_abelian())
    throw DomainError("centz_order_formula: abelian input");
  return hom_order(s.quot_derived_center_type, s.center_type);
}

std::uint64_t cent_order_formula(const StructuralData& s) {
  if (s.group->is_abelian())
    throw DomainError("cent_order_formula: abelian input");
  return hom_order(s.quot_derived_type, s.center_type);
}

std::uint64_t z_inn_order(const StructuralData& s) { return s.z_inn_order; }

Condition1Verdict condition1_check(const StructuralData& s,
                                   std::uint64_t autcentz_order,
                                   std::optional<std::uint64_t> autcent_oracle,
                                   std::uint64_t autcent_formula,
                                   Verdict purely_nonabelian) {
  Condition1Verdict v;
  if (s.group->is_abelian()) {
    v.applicable = false;
    v.equality = Verdict::False;
    v.strict = Verdict::False;
    v.combined = Verdict::False;
    v.note = "abelian group: Inn(G) is trivial, condition not applicable";
    return v;
  }
  v.applicable = true;
  v.equality = s.z_inn_order == autcentz_order ? Verdict::True : Verdict::False;

  if (autcent_oracle) {
    v.strict = *autcent_oracle > autcentz_order ? Verdict::True : Verdict::False;
  } else if (purely_nonabelian == Verdict::True) {
    v.strict = autcent_formula > autcentz_order ? Verdict::True : Verdict::False;
    v.note = "strictness from the hom formula (purely non-abelian established)";
  } else {
    v.strict = Verdict::Unknown;
    v.note = "strictness undecided: no brute-force count and purely "
             "non-abelian not established";
  }

  if (v.equality == Verdict::False)
    v.combined = Verdict::False;
  else if (v.strict == Verdict::Unknown)
    v.combined = Verdict::Unknown;
  else
    v.combined = v.strict;
  return v;
}

TheoremRecord classify_theorems(const StructuralData& s,
                                const Condition1Verdict& cond) {
  TheoremRecord r;
  r.computed = cond.combined;
  const std::uint32_t n = s.group->log_order();
  if (n <= 6) {
    r.regime = "le_p6";
    r.expected = Verdict::False;
  } else if (n == 7) {
    r.regime = "eq_p7";
    const bool rhs = s.center_type == AbelianType(s.group->prime(), {2}) &&
                     s.derived_sub.order() ==
                         checked_pow(s.group->prime(), 4) &&
                     s.nilpotence_class == 4;
    r.expected = rhs ? Verdict::True : Verdict::False;
  } else {
    r.regime = "gt_p7";
    r.expected = Verdict::Unknown;
    r.consistent = Verdict::True;  // nothing to contradict
    return r;
  }
  r.consistent = r.computed == Verdict::Unknown
                     ? Verdict::Unknown
                     : (r.computed == r.expected ? Verdict::True : Verdict::False);
  return r;
}

std::vector<LemmaCheck> structural_lemma_checks(
    const StructuralData& s, const Condition1Verdict& cond,
    std::optional<std::uint64_t> autcentz_oracle) {
  const FiniteGroupView& g = *s.group;
  std::vector<LemmaCheck> out;

  {
    LemmaCheck c{.key = "nc_quotient"};
    c.applicable = s.derived_sub.is_abelian();
    if (c.applicable) {
      const std::uint64_t q_order = g.order() / s.derived_center_product.order();
      const bool cyclic = q_order == 1 ||
                          s.quot_derived_center_type.exponents().size() == 1;
      c.holds = cyclic ? Verdict::False : Verdict::True;
      c.detail = "G/G'Z(G) has type " + s.quot_derived_center_type.to_string();
    }
    out.push_back(std::move(c));
  }

  {
    LemmaCheck c{.key = "coclass2"};
    c.applicable = s.coclass == 2;
    if (c.applicable) {
      if (cond.combined == Verdict::Unknown)
        c.holds = Verdict::Unknown;
      else
        c.holds = cond.combined == Verdict::False ? Verdict::True : Verdict::False;
      c.detail = "condition 1 is " + std::string(to_string(cond.combined));
    }
    out.push_back(std::move(c));
  }

  {
    // Autcent_Z(G) = Inn(G) <=> G' = Z(G) cyclic. The left side needs the
    // count |Autcent_Z| = |G/Z| plus Inn <= Autcent, which holds exactly for
    // class <= 2; an order coincidence alone would not give set equality.
    LemmaCheck c{.key = "attar"};
    c.applicable = autcentz_oracle.has_value();
    if (c.applicable) {
      const bool lhs = *autcentz_oracle ==
                           g.order() / s.center_sub.order() &&
                       s.nilpotence_class <= 2;
      const bool rhs = s.derived_sub == s.center_sub && s.center_sub.is_cyclic();
      c.holds = lhs == rhs ? Verdict::True : Verdict::False;
      c.detail = std::string("Autcent_Z = Inn: ") + (lhs ? "true" : "false") +
                 "; G' = Z(G) cyclic: " + (rhs ? "true" : "false");
    } else {
      c.detail = "needs the brute-force |Autcent_Z| count";
    }
    out.push_back(std::move(c));
  }

  {
    LemmaCheck c{.key = "small_center"};
    const bool center_outside =
        s.center_meet_derived.order() < s.center_sub.order();
    c.applicable = center_outside && s.nilpotence_class >= 3;
    if (c.applicable) {
      const std::uint64_t p = g.prime();
      const bool not_maximal_class = s.coclass != 1;
      const bool big_center = s.center_sub.order() >= p * p;
      const bool big_group = g.order() >= checked_pow(p, 5);
      c.holds = (not_maximal_class && big_center && big_group)
                    ? Verdict::True
                    : Verdict::False;
      c.detail = "coclass " + std::to_string(s.coclass) + ", |Z| = " +
                 std::to_string(s.center_sub.order()) + ", |G| = " +
                 std::to_string(g.order());
    }
    out.push_back(std::move(c));
  }

  return out;
}

AnalysisReport analyze_group(std::shared_ptr<const FiniteGroupView> view,
                             const AnalysisOptions& opts) {
  AnalysisReport r;
  r.name = view->name();
  r.prime = view->prime();
  r.order = view->order();
  r.log_order = view->log_order();
  r.abelian = view->is_abelian();

  if (r.abelian) {
    r.abelian_type = abelian_invariants(*view);
    r.purity = direct_factor_search(view, Subgroup::whole_group(view),
                                    frattini_and_rank(view).first,
                                    opts.budget_subgroups);
    StructuralData s = compute_structure(view);
    r.condition1 = condition1_check(s, 1, std::nullopt, 1, Verdict::False);
    r.structure = std::move(s);
    return r;
  }

  StructuralData s = compute_structure(view);
  r.autcentz_formula = centz_order_formula(s);
  r.autcent_formula = cent_order_formula(s);

  r.purity = direct_factor_search(view, s.center_sub, s.frattini_sub,
                                  opts.budget_subgroups);
  Verdict pna = r.purity.verdict == Purity::PurelyNonAbelian ? Verdict::True
                : r.purity.verdict == Purity::FactorFound    ? Verdict::False
                                                             : Verdict::Unknown;
  r.autcent_formula_valid = pna;

  if (opts.run_oracle) {
    try {
      CentralMapSet maps(view, opts.budget_homs);
      r.autcentz_oracle = autcentz_bruteforce(maps);
      r.autcent_oracle = autcent_bruteforce(maps);
      // Upper central series term Z_2(G) for the literal embedding check.
      auto upper = upper_central_series(view);
      const Subgroup& z2 = upper.size() >= 2 ? upper[1] : upper[0];
      r.inner_center_embeds = inner_center_check(maps, z2).embeds;
    } catch (const BudgetExceeded& e) {
      r.oracle_note = e.what();
    }
  }

  const std::uint64_t autcentz =
      r.autcentz_oracle ? *r.autcentz_oracle : r.autcentz_formula;
  r.condition1 =
      condition1_check(s, autcentz, r.autcent_oracle, r.autcent_formula, pna);
  r.theorem = classify_theorems(s, r.condition1);
  r.lemmas = structural_lemma_checks(s, r.condition1, r.autcentz_oracle);
  r.structure = std::move(s);
  return r;
}

}  // namespace pgroup

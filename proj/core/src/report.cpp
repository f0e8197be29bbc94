#include "pgroup/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace pgroup {

namespace {

const char* purity_string(Purity p) {
  switch (p) {
    case Purity::PurelyNonAbelian: return "purely_nonabelian";
    case Purity::FactorFound: return "factor_found";
    default: return "inconclusive";
  }
}

std::string id_list(const std::vector<std::uint32_t>& ids) {
  std::string s = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ids[i]);
  }
  return s + "]";
}

std::string orders_list(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto line = [&](const std::string& key, const std::string& value) {
    out << "  " << key;
    for (std::size_t i = key.size(); i < 26; ++i) out << ' ';
    out << value << "\n";
  };

  out << "group " << r.name << "\n";
  line("order", std::to_string(r.order) + " = " + std::to_string(r.prime) +
                    "^" + std::to_string(r.log_order));
  if (r.abelian) {
    line("abelian", "yes, type " + r.abelian_type.to_string());
    line("purity", purity_string(r.purity.verdict));
    line("condition1", "not applicable (abelian)");
    return out.str();
  }

  const StructuralData& s = *r.structure;
  line("class / coclass", std::to_string(s.nilpotence_class) + " / " +
                              std::to_string(s.coclass));
  line("d(G)", std::to_string(s.rank));
  line("|Z(G)| / type", std::to_string(s.center_sub.order()) + " / " +
                            s.center_type.to_string());
  line("|G'|", std::to_string(s.derived_sub.order()));
  line("|Z(G) meet G'|", std::to_string(s.center_meet_derived.order()));
  line("|G'Z(G)|", std::to_string(s.derived_center_product.order()));
  line("type G/G'Z(G)", s.quot_derived_center_type.to_string());
  line("type G/G'", s.quot_derived_type.to_string());
  line("upper central orders", orders_list(s.upper_orders));
  line("lower central orders", orders_list(s.lower_orders));
  line("|Z(Inn(G))|", std::to_string(s.z_inn_order));
  line("|Autcent_Z| formula", std::to_string(r.autcentz_formula));
  line("|Autcent| formula",
       std::to_string(r.autcent_formula) + " (valid: " +
           to_string(r.autcent_formula_valid) + ")");
  line("purity", std::string(purity_string(r.purity.verdict)) +
                     (r.purity.note.empty() ? "" : " (" + r.purity.note + ")"));
  if (r.autcentz_oracle)
    line("|Autcent_Z| oracle", std::to_string(*r.autcentz_oracle));
  if (r.autcent_oracle)
    line("|Autcent| oracle", std::to_string(*r.autcent_oracle));
  if (r.inner_center_embeds)
    line("Z(Inn) in Autcent_Z", *r.inner_center_embeds ? "verified" : "FAILED");
  if (!r.oracle_note.empty()) line("oracle", r.oracle_note);
  line("condition1 equality", std::string(to_string(r.condition1.equality)));
  line("condition1 strict", std::string(to_string(r.condition1.strict)));
  line("condition1", std::string(to_string(r.condition1.combined)) +
                         (r.condition1.note.empty()
                              ? ""
                              : " (" + r.condition1.note + ")"));
  line("theorem regime", r.theorem.regime);
  line("theorem expected", std::string(to_string(r.theorem.expected)));
  line("theorem consistent", std::string(to_string(r.theorem.consistent)));
  for (const auto& l : r.lemmas) {
    std::string v = l.applicable
                        ? std::string(to_string(l.holds)) +
                              (l.detail.empty() ? "" : " (" + l.detail + ")")
                        : "hypothesis not applicable";
    line("lemma " + l.key, v);
  }
  return out.str();
}

std::string render_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["prime"] = std::to_string(r.prime);
  j["order"] = std::to_string(r.order);
  j["log_order"] = std::to_string(r.log_order);
  j["abelian"] = r.abelian ? "true" : "false";
  if (r.abelian) {
    j["type"] = r.abelian_type.to_string();
    j["purity"] = purity_string(r.purity.verdict);
    j["condition1"] = "false";
    j["condition1_note"] = r.condition1.note;
    return j.dump();
  }

  const StructuralData& s = *r.structure;
  j["class"] = std::to_string(s.nilpotence_class);
  j["coclass"] = std::to_string(s.coclass);
  j["rank"] = std::to_string(s.rank);
  j["center_order"] = std::to_string(s.center_sub.order());
  j["center_type"] = s.center_type.to_string();
  j["center_members"] = id_list(s.center_sub.members());
  j["derived_order"] = std::to_string(s.derived_sub.order());
  j["derived_members"] = id_list(s.derived_sub.members());
  j["center_meet_derived_order"] =
      std::to_string(s.center_meet_derived.order());
  j["derived_center_order"] = std::to_string(s.derived_center_product.order());
  j["quot_derived_center_type"] = s.quot_derived_center_type.to_string();
  j["quot_derived_type"] = s.quot_derived_type.to_string();
  j["z_inn_order"] = std::to_string(s.z_inn_order);
  j["autcentz_formula"] = std::to_string(r.autcentz_formula);
  j["autcent_formula"] = std::to_string(r.autcent_formula);
  j["autcent_formula_valid"] = to_string(r.autcent_formula_valid);
  j["purity"] = purity_string(r.purity.verdict);
  if (r.autcentz_oracle)
    j["autcentz_oracle"] = std::to_string(*r.autcentz_oracle);
  if (r.autcent_oracle)
    j["autcent_oracle"] = std::to_string(*r.autcent_oracle);
  if (r.inner_center_embeds)
    j["inner_center_embeds"] = *r.inner_center_embeds ? "true" : "false";
  if (!r.oracle_note.empty()) j["oracle_note"] = r.oracle_note;
  j["condition1_equality"] = to_string(r.condition1.equality);
  j["condition1_strict"] = to_string(r.condition1.strict);
  j["condition1"] = to_string(r.condition1.combined);
  j["theorem_regime"] = r.theorem.regime;
  j["theorem_expected"] = to_string(r.theorem.expected);
  j["theorem_consistent"] = to_string(r.theorem.consistent);
  for (const auto& l : r.lemmas) {
    j["lemma_" + l.key + "_applicable"] = l.applicable ? "true" : "false";
    j["lemma_" + l.key + "_holds"] =
        l.applicable ? to_string(l.holds) : "n/a";
  }
  return j.dump();
}

}  // namespace pgroup

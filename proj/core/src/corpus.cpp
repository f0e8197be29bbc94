#include "pgroup/corpus.hpp"

#include <map>
#include <mutex>

#include "pgroup/parser.hpp"

namespace pgroup {

namespace {

// Commutator relations are stored in the [gj, gi] (j > i) orientation:
// a textbook relation [gi, gj] = w with i < j appears here as
// comm j i: w^-1. Negative exponents are normalized mod p by the parser.
const char* const kCorpusText = R"(# Built-in control groups.

# Order-3^7 witness group for the strict gap between the center-fixing and
# the full central automorphism group. Claimed id: SmallGroup(2187,131) in
# the GAP small groups library (recorded as provenance, not verified here).
# Invariants: class 4, Z = <g4> of type [2], G' = <g3,g5,g6,g7> of order 81,
# Z meet G' = <g7>, d(G) = 2.
group sg2187-131
prime 3
ngens 7
pow 1: 0 0 0 1 0 0 0      # g1^3 = g4
pow 3: 0 0 0 0 0 0 -1     # g3^3 = g7^-1
pow 4: 0 0 0 0 0 0 1      # g4^3 = g7
comm 2 1: 0 0 1 0 0 0 0   # [g2,g1] = g3, i.e. [g1,g2] = g3^-1
comm 3 1: 0 0 0 0 1 0 0   # [g3,g1] = g5, i.e. [g1,g3] = g5^-1
comm 3 2: 0 0 0 0 0 1 0   # [g3,g2] = g6, i.e. [g2,g3] = g6^-1
comm 5 1: 0 0 0 0 0 0 1   # [g5,g1] = g7, i.e. [g1,g5] = g7^-1
comm 6 2: 0 0 0 0 0 0 1   # [g6,g2] = g7, i.e. [g2,g6] = g7^-1
end

# Cyclic group of order 5.
group c5
prime 5
ngens 1
end

# Cyclic group of order 9, presented on two generators with g1^3 = g2.
group c9
prime 3
ngens 2
pow 1: 0 1
end

# Elementary abelian group of order 9.
group c3xc3
prime 3
ngens 2
end

# Extraspecial group of order 27 and exponent 3 (Heisenberg group over F_3).
group es27-exp3
prime 3
ngens 3
comm 2 1: 0 0 1
end

# Extraspecial group of order 27 and exponent 9 (C9 : C3).
group es27-exp9
prime 3
ngens 3
pow 1: 0 0 1
comm 2 1: 0 0 1
end

# Dihedral group of order 16: g1 the reflection, g2 the rotation of order 8,
# g3 = g2^2, g4 = g2^4. Maximal-class control at p = 2.
group d16
prime 2
ngens 4
pow 2: 0 0 1 0
pow 3: 0 0 0 1
comm 2 1: 0 0 1 1         # [g2,g1] = g2^-2 = g3 g4
comm 3 1: 0 0 0 1         # [g3,g1] = g2^-4 = g4
end

# Generalized quaternion group of order 16. Maximal-class control at p = 2.
group q16
prime 2
ngens 4
pow 1: 0 0 0 1            # g1^2 = g4
pow 2: 0 0 1 0
pow 3: 0 0 0 1
comm 2 1: 0 0 1 1
comm 3 1: 0 0 0 1
end

# C2 x D8: g1 generates the direct C2 factor; g2, g3, g4 = reflection,
# rotation, rotation^2 of D8. Has an abelian direct factor by construction.
group c2xd8
prime 2
ngens 4
pow 3: 0 0 0 1
comm 3 2: 0 0 0 1         # [g3,g2] = g3^-2 = g4
end

# Coclass-2 group of order 3^5: the free 2-generator class-3 group of
# exponent 3. Z = <g4,g5> has order 9 and lies inside G' = <g3,g4,g5>.
group coclass2-3^5
prime 3
ngens 5
comm 2 1: 0 0 1 0 0
comm 3 1: 0 0 0 1 0
comm 3 2: 0 0 0 0 1
end

# Class-3 group of order 3^6: the previous group with g1 of order 9
# (g1^3 = g6 central).
group class3-3^6
prime 3
ngens 6
pow 1: 0 0 0 0 0 1
comm 2 1: 0 0 1 0 0 0
comm 3 1: 0 0 0 1 0 0
comm 3 2: 0 0 0 0 1 0
end

# Class-3 group of order 3^7: both g1 and g2 of order 9 (g1^3 = g6,
# g2^3 = g7, both central). Witnesses the "false" direction of the order-p^7
# classification: class 3, Z of type [1,1,1,1].
group class3-3^7
prime 3
ngens 7
pow 1: 0 0 0 0 0 1 0
pow 2: 0 0 0 0 0 0 1
comm 2 1: 0 0 1 0 0 0 0
comm 3 1: 0 0 0 1 0 0 0
comm 3 2: 0 0 0 0 1 0 0
end

# C3 x extraspecial-27 (exponent 3): g4 generates the direct C3 factor.
# Direct-factor detection control: not purely non-abelian.
group c3xes27
prime 3
ngens 4
comm 2 1: 0 0 1 0
end
)";

struct ProvenanceNote {
  const char* name;
  const char* note;
};

constexpr ProvenanceNote kProvenance[] = {
    {"sg2187-131",
     "order-3^7 witness group; claimed GAP SmallGroup id (2187,131)"},
    {"c5", "cyclic control of order 5"},
    {"c9", "cyclic control of order 9"},
    {"c3xc3", "elementary abelian control of order 9"},
    {"es27-exp3", "extraspecial group of order 27, exponent 3"},
    {"es27-exp9", "extraspecial group of order 27, exponent 9"},
    {"d16", "dihedral group of order 16 (maximal class)"},
    {"q16", "generalized quaternion group of order 16 (maximal class)"},
    {"c2xd8", "C2 x D8, has an abelian direct factor"},
    {"coclass2-3^5", "coclass-2 group of order 3^5"},
    {"class3-3^6", "class-3 group of order 3^6"},
    {"class3-3^7", "class-3 group of order 3^7"},
    {"c3xes27", "C3 x extraspecial-27, direct-factor control"},
};

std::vector<CorpusEntry> load() {
  auto groups = parse_presentations(kCorpusText, "<builtin corpus>");
  std::vector<CorpusEntry> out;
  std::map<std::string, bool> names;
  for (auto& g : groups) {
    if (!names.emplace(g.name(), true).second)
      throw DomainError("corpus: duplicate name '" + g.name() + "'");
    auto report = g.check_consistency();
    if (!report.passed)
      throw DomainError("corpus entry '" + g.name() +
                        "' fails its consistency check: " +
                        (report.failures.empty() ? "?" : report.failures[0]));
    CorpusEntry e;
    e.name = g.name();
    for (const auto& p : kProvenance)
      if (e.name == p.name) e.provenance = p.note;
    e.presentation = std::make_shared<const PcPresentation>(std::move(g));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = load();
  return corpus;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
  for (const auto& e : builtin_corpus())
    if (e.name == name) return &e;
  return nullptr;
}

std::string corpus_text() { return kCorpusText; }

}  // namespace pgroup

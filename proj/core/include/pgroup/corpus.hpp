#ifndef PGROUP_CORPUS_HPP
#define PGROUP_CORPUS_HPP

#include <memory>
#include <string>
#include <vector>

#include "pgroup/pc_presentation.hpp"

namespace pgroup {

struct CorpusEntry {
  std::string name;
  std::string provenance;
  std::shared_ptr<const PcPresentation> presentation;
};

/// The built-in control groups, in a fixed order. Every entry has passed
/// check_consistency at load time (an entry failing the check is a build
/// defect and raises DomainError).
///
/// Contents: the order-3^7 witness group (claimed GAP SmallGroup id
/// (2187,131)); cyclic and elementary abelian controls C5, C9, C3 x C3; both
/// extraspecial groups of order 27; dihedral and quaternion groups of order
/// 16 (maximal-class controls); C2 x D8 (a group with an abelian direct
/// factor); a coclass-2 group of order 3^5; class-3 groups of orders 3^6 and
/// 3^7; and C3 x extraspecial-27 (direct-factor control).
const std::vector<CorpusEntry>& builtin_corpus();

/// Entry lookup by name; nullptr when absent.
const CorpusEntry* find_corpus_entry(const std::string& name);

/// The corpus as presentation-format text (the same text the entries are
/// parsed from).
std::string corpus_text();

}  // namespace pgroup

#endif  // PGROUP_CORPUS_HPP

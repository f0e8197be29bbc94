#ifndef PGROUP_PARSER_HPP
#define PGROUP_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pgroup/pc_presentation.hpp"

namespace pgroup {

/// Parses the line-oriented presentation format. One input may contain any
/// number of group blocks:
///
///   group <name>
///   prime <p>
///   ngens <n>
///   pow <i>: <e1> <e2> ... <en>        # image of g_i^p; omitted = identity
///   comm <j> <i>: <e1> ... <en>        # value of [g_j, g_i], j > i
///   end
///
/// '#' starts a comment. Exponents may be negative; they are normalized
/// mod p at parse time. Throws ParseError with the offending line/column, or
/// DomainError for semantic violations (weighting, non-prime p, duplicate or
/// out-of-range relations).
std::vector<PcPresentation> parse_presentations(std::string_view text,
                                                const std::string& source_name);

/// Convenience wrapper for inputs expected to hold exactly one group.
PcPresentation parse_presentation(std::string_view text,
                                  const std::string& source_name);

}  // namespace pgroup

#endif  // PGROUP_PARSER_HPP

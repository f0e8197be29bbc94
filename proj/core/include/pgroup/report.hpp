#ifndef PGROUP_REPORT_HPP
#define PGROUP_REPORT_HPP

#include <string>

#include "pgroup/analysis.hpp"

namespace pgroup {

/// Human-readable aligned key/value report.
std::string render_text(const AnalysisReport& r);

/// One JSON object (single line) with the documented frozen key set; all
/// integers are rendered as decimal strings so values never lose precision.
/// Oracle keys appear only when the corresponding value was computed.
std::string render_json(const AnalysisReport& r);

}  // namespace pgroup

#endif  // PGROUP_REPORT_HPP

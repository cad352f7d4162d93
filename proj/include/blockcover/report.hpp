#ifndef BLOCKCOVER_REPORT_HPP
#define BLOCKCOVER_REPORT_HPP

#include <string>
#include <vector>

#include "blockcover/bcc.hpp"
#include "blockcover/condition.hpp"
#include "blockcover/profile.hpp"

namespace blockcover {

enum class ReportFormat { text, json };

// Renders a coverage report, optionally with the dictator assignment (pass
// nullptr to omit the block). All lists follow the canonical index order, so
// output bytes are stable across runs.
std::string emit_report(const CoverageReport &r, const DictatorAssignment *d, const Profile &p,
                        ReportFormat format);

// Renders a bare decomposition: components, articulation vertices, and the
// size-2 / size->=3 index split. Labels are indexed by vertex id.
std::string emit_decomposition(const Decomposition &d, const std::vector<std::string> &labels,
                               ReportFormat format);

}  // namespace blockcover

#endif

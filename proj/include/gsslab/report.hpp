#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gsslab/analysis.hpp"
#include "gsslab/gss.hpp"
#include "gsslab/theorems.hpp"

namespace gsslab {

enum class OutputFormat { Table, Csv, StructuredText };

/// "table", "csv" or "stext". Throws ParseError.
OutputFormat parse_format(std::string_view text);

struct MemberReport {
  GssIndex index;
  SequenceReport report;
};

/// "2:2/2;4:1/1" (length:blocks/gaps), or "none" for constant input.
std::string format_runs(const std::optional<RunHistogram>& runs);
/// "ones/zeros", or "na".
std::string format_balance(const std::optional<BalanceCounts>& counts);

std::string render_reports(const std::vector<MemberReport>& reports, OutputFormat format);
std::string render_scorecard(const std::vector<VerdictReport>& verdicts, OutputFormat format);

}  // namespace gsslab

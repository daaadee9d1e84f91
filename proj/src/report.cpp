#include "gsslab/report.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>
#include <sstream>

#include "gsslab/error.hpp"

namespace gsslab {
namespace {

using nlohmann::json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& n : notes) {
    if (!out.empty()) out += "; ";
    out += n;
  }
  return out;
}

json balance_json(const std::optional<BalanceCounts>& c) {
  if (!c) return nullptr;
  return json{{"ones", c->ones}, {"zeros", c->zeros}};
}

std::optional<BalanceCounts> even_of(const SequenceReport& r) {
  return r.parity ? std::optional(r.parity->even) : std::nullopt;
}
std::optional<BalanceCounts> odd_of(const SequenceReport& r) {
  return r.parity ? std::optional(r.parity->odd) : std::nullopt;
}

std::string witness_text(const Witness& w) {
  std::string out;
  if (w.index) out += "index=" + w.index->to_string() + " ";
  if (w.position) out += "position=" + std::to_string(*w.position) + " ";
  return out + w.details;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "stext") return OutputFormat::StructuredText;
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(text) + "' (table, csv, stext)");
}

std::string format_runs(const std::optional<RunHistogram>& runs) {
  if (!runs) return "none";
  std::string out;
  for (const auto& [length, count] : *runs) {
    if (!out.empty()) out += ';';
    out += std::to_string(length) + ":" + std::to_string(count.blocks) + "/" + std::to_string(count.gaps);
  }
  return out;
}

std::string format_balance(const std::optional<BalanceCounts>& counts) {
  if (!counts) return "na";
  return std::to_string(counts->ones) + "/" + std::to_string(counts->zeros);
}

std::string render_reports(const std::vector<MemberReport>& reports, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::StructuredText:
      for (const auto& m : reports) {
        const auto& r = m.report;
        json runs = nullptr;
        if (r.runs) {
          runs = json::array();
          for (const auto& [length, count] : *r.runs) {
            runs.push_back({{"length", length}, {"blocks", count.blocks}, {"gaps", count.gaps}});
          }
        }
        const json rec = {{"index", m.index.to_string()}, {"period", r.least_period}, {"lc", r.linear_complexity},
                          {"ones", r.counts.ones},        {"zeros", r.counts.zeros},  {"runs", runs},
                          {"even_balance", balance_json(even_of(r))},
                          {"odd_balance", balance_json(odd_of(r))}};
        os << rec.dump() << '\n';
      }
      break;
    case OutputFormat::Csv:
      os << "index,period,lc,ones,zeros,runs,even_balance,odd_balance\n";
      for (const auto& m : reports) {
        const auto& r = m.report;
        os << m.index.to_string() << ',' << r.least_period << ',' << r.linear_complexity << ',' << r.counts.ones << ','
           << r.counts.zeros << ',' << csv_field(format_runs(r.runs)) << ',' << format_balance(even_of(r)) << ','
           << format_balance(odd_of(r)) << '\n';
      }
      break;
    case OutputFormat::Table: {
      using Row = std::array<std::string, 8>;
      std::vector<Row> rows = {{"index", "period", "lc", "ones", "zeros", "runs", "even_balance", "odd_balance"}};
      for (const auto& m : reports) {
        const auto& r = m.report;
        rows.push_back({m.index.to_string(), std::to_string(r.least_period), std::to_string(r.linear_complexity),
                        std::to_string(r.counts.ones), std::to_string(r.counts.zeros), format_runs(r.runs),
                        format_balance(even_of(r)), format_balance(odd_of(r))});
      }
      std::array<std::size_t, 8> width{};
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      }
      for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
          line += row[c];
          if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << line << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string render_scorecard(const std::vector<VerdictReport>& verdicts, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::StructuredText:
      for (const auto& v : verdicts) {
        json witness = nullptr;
        if (v.witness) {
          witness = {{"index", v.witness->index ? json(v.witness->index->to_string()) : json(nullptr)},
                     {"position", v.witness->position ? json(*v.witness->position) : json(nullptr)},
                     {"details", v.witness->details}};
        }
        const json rec = {{"name", v.name},         {"status", std::string(to_string(v.status))},
                          {"witness", witness},     {"scope", v.scope},
                          {"vacuous", v.vacuous},   {"notes", v.notes}};
        os << rec.dump() << '\n';
      }
      break;
    case OutputFormat::Csv:
      os << "name,status,vacuous,index,position,details,notes,scope\n";
      for (const auto& v : verdicts) {
        os << v.name << ',' << to_string(v.status) << ',' << (v.vacuous ? "true" : "false") << ',';
        if (v.witness) {
          os << (v.witness->index ? v.witness->index->to_string() : "") << ','
             << (v.witness->position ? std::to_string(*v.witness->position) : "") << ','
             << csv_field(v.witness->details);
        } else {
          os << ",,";
        }
        os << ',' << csv_field(join_notes(v.notes)) << ',' << csv_field(v.scope) << '\n';
      }
      break;
    case OutputFormat::Table:
      for (const auto& v : verdicts) {
        os << v.name << ": " << to_string(v.status);
        if (v.witness) os << ' ' << witness_text(*v.witness);
        if (v.vacuous) os << " (vacuous)";
        if (!v.notes.empty()) os << "  [" << join_notes(v.notes) << ']';
        os << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace gsslab

#include "gsslab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "gsslab/analysis.hpp"
#include "gsslab/error.hpp"
#include "gsslab/gf2x.hpp"
#include "gsslab/gss.hpp"
#include "gsslab/report.hpp"
#include "gsslab/sequences.hpp"
#include "gsslab/theorems.hpp"

namespace gsslab::cli {
namespace {

struct Config {
  std::string poly;
  std::string format = "table";
  std::string out_path;
  std::optional<int> max_l;
};

struct MemberSelection {
  std::optional<std::uint32_t> shift;
  std::string index;
  bool family = false;
  bool trace = false;
};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

// --max-l, then GSSLAB_MAX_L, then the command's default.
int resolve_cap(const Config& cfg, int fallback) {
  int cap = fallback;
  if (cfg.max_l) {
    cap = *cfg.max_l;
  } else if (const char* env = std::getenv(kMaxLEnv); env != nullptr && *env != '\0') {
    cap = parse_int(env, kMaxLEnv);
  }
  if (cap < kMinDegree || cap > kHardMaxDegree) {
    throw Error(ErrorKind::DegreeOutOfRange, "cap " + std::to_string(cap) + " outside " + std::to_string(kMinDegree) +
                                                 ".." + std::to_string(kHardMaxDegree));
  }
  return cap;
}

PrimitivePolynomial require_poly(const Config& cfg, int cap) {
  if (cfg.poly.empty()) throw Error(ErrorKind::InvalidArgument, "--poly is required");
  return validate_primitive(cfg.poly, cap);
}

GssIndex select_index(const Field& field, const MemberSelection& sel) {
  if (sel.shift && !sel.index.empty()) throw Error(ErrorKind::InvalidArgument, "give either --shift or --index");
  if (sel.shift) return parse_index(field, std::to_string(*sel.shift));
  if (!sel.index.empty()) return parse_index(field, sel.index);
  throw Error(ErrorKind::InvalidArgument, "one of --shift, --index or --family is required");
}

std::string render_trace(const MSequence& seq, GssIndex index) {
  std::ostringstream os;
  os << "n\ta_n\tv_n\tb\n";
  for (const auto& row : gss_trace(seq, index)) {
    os << row.n << '\t' << row.a << '\t';
    if (index.is_zero()) {
      os << "0";
    } else {
      os << "a_" << row.source << "=" << row.v;
    }
    os << '\t';
    if (row.output_position) os << "b_" << *row.output_position << "=" << row.v;
    os << '\n';
  }
  return os.str();
}

int cmd_generate(const Config& cfg, const MemberSelection& sel, std::ostream& out, std::ostream& err) {
  const auto poly = require_poly(cfg, resolve_cap(cfg, sel.family ? kExhaustiveCap : kGenerationCap));
  const auto seq = generate_msequence(poly);
  if (sel.family) {
    out << export_family(gss_family(seq));
    return kSuccess;
  }
  const Field field(poly);
  const auto index = select_index(field, sel);
  if (sel.trace) err << render_trace(seq, index);
  out << export_sequences({gss_generate(seq, index).bits});
  return kSuccess;
}

int cmd_analyze(const Config& cfg, const MemberSelection& sel, std::ostream& out) {
  const auto format = parse_format(cfg.format);
  const auto poly = require_poly(cfg, resolve_cap(cfg, sel.family ? kExhaustiveCap : kGenerationCap));
  const auto seq = generate_msequence(poly);
  std::vector<MemberReport> reports;
  if (sel.family) {
    for (const auto& m : gss_family(seq).members) reports.push_back({m.index, analyze(m.bits)});
  } else {
    const Field field(poly);
    const auto index = select_index(field, sel);
    reports.push_back({index, analyze(gss_generate(seq, index).bits)});
  }
  out << render_reports(reports, format);
  return kSuccess;
}

int cmd_verify(const Config& cfg, std::vector<std::string> names, bool all, std::ostream& out) {
  const auto format = parse_format(cfg.format);
  const auto poly = require_poly(cfg, resolve_cap(cfg, kExhaustiveCap));
  if (all || std::find(names.begin(), names.end(), "all") != names.end()) names = verifier_names();
  if (names.empty()) throw Error(ErrorKind::InvalidArgument, "name at least one verifier, or --all");
  const auto& known = verifier_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown verifier '" + n + "'");
    }
  }
  const Workbench bench(poly);
  const auto verdicts = verify_selected(bench, names);
  out << render_scorecard(verdicts, format);
  const bool ok = std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.confirmed(); });
  return ok ? kSuccess : kCounterexample;
}

std::pair<int, int> parse_degrees(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int d = parse_int(text, "degree");
    return {d, d};
  }
  return {parse_int(text.substr(0, dots), "degree"), parse_int(text.substr(dots + 2), "degree")};
}

int cmd_scan(const Config& cfg, const std::string& degrees, std::ostream& out) {
  using nlohmann::json;
  const auto format = parse_format(cfg.format);
  const int cap = resolve_cap(cfg, kExhaustiveCap);
  const auto [lo, hi] = parse_degrees(degrees);
  if (lo < kMinDegree || hi > cap || lo > hi) {
    throw Error(ErrorKind::DegreeOutOfRange, "degrees " + std::to_string(lo) + ".." + std::to_string(hi) +
                                                 " not within " + std::to_string(kMinDegree) + ".." + std::to_string(cap));
  }
  if (format == OutputFormat::Csv) out << "poly,symbolic,degree,status,confirmed,total,failed\n";
  std::size_t total = 0, clean = 0;
  for (int degree = lo; degree <= hi; ++degree) {
    std::size_t found = 0, degree_clean = 0;
    for (const auto& poly : enumerate_primitive(degree)) {
      const auto verdicts = verify_all(poly);
      std::vector<std::string> failed;
      for (const auto& v : verdicts) {
        if (!v.confirmed()) failed.push_back(v.name);
      }
      const std::size_t ok = verdicts.size() - failed.size();
      const std::string status(to_string(failed.empty() ? VerdictStatus::Confirmed : VerdictStatus::Counterexample));
      std::string failed_list;
      for (const auto& f : failed) failed_list += (failed_list.empty() ? "" : ";") + f;
      ++found;
      if (failed.empty()) ++degree_clean;
      switch (format) {
        case OutputFormat::Table:
          out << poly.to_hex() << ' ' << poly.to_string() << ' ' << status << ' ' << ok << '/' << verdicts.size();
          if (!failed.empty()) out << ' ' << failed_list;
          out << '\n';
          break;
        case OutputFormat::Csv:
          out << poly.to_hex() << ',' << poly.to_string() << ',' << degree << ',' << status << ',' << ok << ','
              << verdicts.size() << ',' << failed_list << '\n';
          break;
        case OutputFormat::StructuredText:
          out << json{{"poly", poly.to_hex()}, {"symbolic", poly.to_string()}, {"degree", degree},
                      {"status", status},      {"confirmed", ok},            {"total", verdicts.size()},
                      {"failed", failed}}
                     .dump()
              << '\n';
          break;
      }
    }
    if (format == OutputFormat::Table) {
      out << "L=" << degree << ": " << found << " primitive, " << degree_clean << " all-confirmed, "
          << found - degree_clean << " with counterexamples\n";
    }
    total += found;
    clean += degree_clean;
  }
  if (format == OutputFormat::Table) {
    out << "total: " << total << " primitive, " << clean << " all-confirmed, " << total - clean
        << " with counterexamples\n";
  }
  return clean == total ? kSuccess : kCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized self-shrinking sequence workbench", "gsslab"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--poly", cfg.poly, "Primitive polynomial, e.g. x^5+x^2+1 or 0x25");
  app.add_option("--format", cfg.format, "table | csv | stext")->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  app.add_option("--max-l", cfg.max_l, "Degree cap (overrides GSSLAB_MAX_L)");

  MemberSelection gen_sel;
  auto* generate = app.add_subcommand("generate", "Print one family member, or the whole family");
  generate->add_option("--shift", gen_sel.shift, "Shift s of the mapping 1 -> alpha^s");
  generate->add_option("--index", gen_sel.index, "zero | s=<int> | G=<bits> | ss");
  generate->add_flag("--family", gen_sel.family, "Export all 2^L members");
  generate->add_flag("--trace", gen_sel.trace, "Print the decimation trace to stderr");

  MemberSelection an_sel;
  auto* analyze_cmd = app.add_subcommand("analyze", "Period, LC, balance and runs of members");
  analyze_cmd->add_option("--shift", an_sel.shift, "Shift s of the mapping 1 -> alpha^s");
  analyze_cmd->add_option("--index", an_sel.index, "zero | s=<int> | G=<bits> | ss");
  analyze_cmd->add_flag("--family", an_sel.family, "Analyze all 2^L members");

  std::vector<std::string> names;
  bool all = false;
  auto* verify = app.add_subcommand("verify", "Run structural verifiers and print a scorecard");
  verify->add_option("names", names, "Verifier names (or 'all')");
  verify->add_flag("--all", all, "Run every verifier");

  std::string degrees;
  auto* scan = app.add_subcommand("scan", "Verify every primitive polynomial in a degree range");
  scan->add_option("--degrees", degrees, "Range a..b")->required();

  for (auto* sub : {generate, analyze_cmd, verify, scan}) sub->fallthrough();

  std::vector<char*> argv;
  std::vector<std::string> storage(args);
  if (storage.empty()) storage.emplace_back("gsslab");
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open --out path '" << cfg.out_path << "'\n";
      return kUsageError;
    }
    sink = &file;
  }

  try {
    if (generate->parsed()) return cmd_generate(cfg, gen_sel, *sink, err);
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, an_sel, *sink);
    if (verify->parsed()) return cmd_verify(cfg, names, all, *sink);
    return cmd_scan(cfg, degrees, *sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace gsslab::cli

#include "eccaudit/report.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace eccaudit {

namespace {

using Json = nlohmann::ordered_json;

Json header_json(const ReportHeader& h) {
  Json j;
  j["header"] = {{"tool_version", h.tool_version},
                 {"corpus", h.corpus},
                 {"ecc_convention", h.ecc_convention},
                 {"generator", h.generator}};
  return j;
}

void write_csv_header(std::ostream& out, const ReportHeader& h, std::string_view columns) {
  out << "# tool_version: " << h.tool_version << '\n'
      << "# corpus: " << h.corpus << '\n'
      << "# ecc_convention: " << h.ecc_convention << '\n'
      << "# generator: " << h.generator << '\n'
      << columns << '\n';
}

const char* kAuditColumns =
    "graph6,n,m,pattern,kind,variant,transform_connected,exact,bound,slack,verdict";
const char* kCrosscheckColumns = "graph6,n,m,pattern,check,index,provenance,actual,expected,match";

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown report format '" + std::string(text) + "'");
}

AuditReportWriter::AuditReportWriter(std::ostream& out, ReportFormat format,
                                     const ReportHeader& header)
    : out_(out), format_(format) {
  if (format_ == ReportFormat::Csv) {
    write_csv_header(out_, header, kAuditColumns);
  } else {
    out_ << "[\n" << header_json(header).dump();
  }
}

void AuditReportWriter::write(const AuditRow& r) {
  if (format_ == ReportFormat::Csv) {
    out_ << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.pattern.to_string()
         << ',' << to_string(r.kind) << ',' << to_string(r.variant) << ','
         << (r.transform_connected ? "true" : "false") << ',' << to_string(r.exact) << ','
         << r.bound.to_string() << ',' << to_string(r.slack) << ',' << to_string(r.verdict)
         << '\n';
    return;
  }
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["pattern"] = r.pattern.to_string();
  j["kind"] = std::string(to_string(r.kind));
  j["variant"] = std::string(to_string(r.variant));
  j["transform_connected"] = r.transform_connected;
  j["exact"] = to_string(r.exact);
  j["bound"] = r.bound.to_string();
  j["slack"] = to_string(r.slack);
  j["verdict"] = std::string(to_string(r.verdict));
  out_ << ",\n" << j.dump();
}

void AuditReportWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == ReportFormat::Json) out_ << "\n]\n";
  out_.flush();
}

AuditReportWriter::~AuditReportWriter() {
  try {
    finish();
  } catch (...) {
  }
}

CrosscheckReportWriter::CrosscheckReportWriter(std::ostream& out, ReportFormat format,
                                               const ReportHeader& header)
    : out_(out), format_(format) {
  if (format_ == ReportFormat::Csv) {
    write_csv_header(out_, header, kCrosscheckColumns);
  } else {
    out_ << "[\n" << header_json(header).dump();
  }
}

void CrosscheckReportWriter::write(const CrosscheckRow& r) {
  const std::string expected = r.expected ? std::to_string(*r.expected) : "undef";
  if (format_ == ReportFormat::Csv) {
    out_ << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.pattern.to_string()
         << ',' << to_string(r.check) << ',' << r.index << ',' << r.provenance.to_string()
         << ',' << r.actual << ',' << expected << ',' << (r.match ? "true" : "false") << '\n';
    return;
  }
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["pattern"] = r.pattern.to_string();
  j["check"] = std::string(to_string(r.check));
  j["index"] = r.index;
  j["provenance"] = r.provenance.to_string();
  j["actual"] = r.actual;
  j["expected"] = expected;
  j["match"] = r.match;
  out_ << ",\n" << j.dump();
}

void CrosscheckReportWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == ReportFormat::Json) out_ << "\n]\n";
  out_.flush();
}

CrosscheckReportWriter::~CrosscheckReportWriter() {
  try {
    finish();
  } catch (...) {
  }
}

void write_report(const std::vector<AuditRow>& rows, ReportFormat format,
                  const ReportHeader& header, std::ostream& out) {
  AuditReportWriter writer(out, format, header);
  for (const auto& r : rows) writer.write(r);
  writer.finish();
}

void write_report(const std::vector<AuditRow>& rows, ReportFormat format,
                  const ReportHeader& header, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
  write_report(rows, format, header, out);
  if (!out) throw std::runtime_error("error while writing report to '" + path + "'");
}

}  // namespace eccaudit

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "eccaudit/audit.hpp"

namespace eccaudit {

inline constexpr const char* kToolVersion = "eccaudit 0.1.0";

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(std::string_view text);

/// Provenance of a report. Serialized as leading "# key: value" lines in CSV
/// and as the first element of the JSON array.
struct ReportHeader {
  std::string tool_version = kToolVersion;
  std::string corpus;
  std::string ecc_convention = kEdgeEccConvention;
  std::string generator = kGeneratorName;
};

/// Streaming audit report. CSV columns:
/// graph6,n,m,pattern,kind,variant,transform_connected,exact,bound,slack,verdict
class AuditReportWriter {
 public:
  AuditReportWriter(std::ostream& out, ReportFormat format, const ReportHeader& header);
  void write(const AuditRow& row);
  /// Closes the JSON array; a no-op for CSV. Called by the destructor if needed.
  void finish();
  ~AuditReportWriter();

  AuditReportWriter(const AuditReportWriter&) = delete;
  AuditReportWriter& operator=(const AuditReportWriter&) = delete;

 private:
  std::ostream& out_;
  ReportFormat format_;
  bool finished_ = false;
};

/// Streaming crosscheck report. CSV columns:
/// graph6,n,m,pattern,check,index,provenance,actual,expected,match
class CrosscheckReportWriter {
 public:
  CrosscheckReportWriter(std::ostream& out, ReportFormat format, const ReportHeader& header);
  void write(const CrosscheckRow& row);
  void finish();
  ~CrosscheckReportWriter();

  CrosscheckReportWriter(const CrosscheckReportWriter&) = delete;
  CrosscheckReportWriter& operator=(const CrosscheckReportWriter&) = delete;

 private:
  std::ostream& out_;
  ReportFormat format_;
  bool finished_ = false;
};

void write_report(const std::vector<AuditRow>& rows, ReportFormat format,
                  const ReportHeader& header, std::ostream& out);
/// Throws std::runtime_error if the path cannot be written.
void write_report(const std::vector<AuditRow>& rows, ReportFormat format,
                  const ReportHeader& header, const std::string& path);

}  // namespace eccaudit

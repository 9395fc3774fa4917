#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace loghankel {

// One output row. Absent fields stay empty in CSV and are omitted from JSON,
// so the same schema serves bounds-only sweeps and full numeric scans.
struct ReportRow {
  std::optional<double> alpha;
  std::optional<std::string> cls;
  std::optional<std::string> branch;
  std::optional<double> bound;
  std::optional<double> attained;
  std::optional<double> numeric_max;
  std::optional<double> gap;
  std::optional<double> margin;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;
};

inline constexpr const char* kCsvHeader =
    "alpha,class,branch,bound,attained,numeric_max,gap,margin";

// 12 significant digits, shortest form ("%.12g").
std::string format_double(double v);

std::string to_csv(const Report& report);
std::string to_json(const Report& report);
std::string to_text(const Report& report);

// Inverse of to_csv: recovers the seed comment, skips the header, maps empty
// cells back to absent fields. Throws std::invalid_argument on malformed rows.
Report parse_csv(const std::string& text);

// format is one of "csv", "json", "text"; anything else throws.
void write_report(std::ostream& os, const Report& report,
                  const std::string& format);

}  // namespace loghankel

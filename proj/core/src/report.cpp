#include "loghankel/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace loghankel {
namespace {

std::string cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string cell(const std::optional<std::string>& v) {
  return v ? *v : std::string();
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    auto pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<double> parse_cell_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) {
    throw std::invalid_argument("parse_csv: bad numeric cell '" + s + "'");
  }
  return v;
}

std::optional<std::string> parse_cell_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << "# seed=" << report.seed << "\n" << kCsvHeader << "\n";
  for (const ReportRow& r : report.rows) {
    os << cell(r.alpha) << ',' << cell(r.cls) << ',' << cell(r.branch) << ','
       << cell(r.bound) << ',' << cell(r.attained) << ',' << cell(r.numeric_max)
       << ',' << cell(r.gap) << ',' << cell(r.margin) << "\n";
  }
  return os.str();
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["seed"] = report.seed;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& r : report.rows) {
    nlohmann::ordered_json row;
    if (r.alpha) row["alpha"] = *r.alpha;
    if (r.cls) row["class"] = *r.cls;
    if (r.branch) row["branch"] = *r.branch;
    if (r.bound) row["bound"] = *r.bound;
    if (r.attained) row["attained"] = *r.attained;
    if (r.numeric_max) row["numeric_max"] = *r.numeric_max;
    if (r.gap) row["gap"] = *r.gap;
    if (r.margin) row["margin"] = *r.margin;
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string to_text(const Report& report) {
  const std::vector<std::string> headers = {"alpha",    "class",       "branch",
                                            "bound",    "attained",    "numeric_max",
                                            "gap",      "margin"};
  std::vector<std::vector<std::string>> grid;
  grid.push_back(headers);
  for (const ReportRow& r : report.rows) {
    grid.push_back({cell(r.alpha), cell(r.cls), cell(r.branch), cell(r.bound),
                    cell(r.attained), cell(r.numeric_max), cell(r.gap),
                    cell(r.margin)});
  }
  std::vector<std::size_t> widths(headers.size(), 0);
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      widths[j] = std::max(widths[j], row[j].size());
    }
  }
  std::ostringstream os;
  os << "# seed=" << report.seed << "\n";
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << std::left << std::setw(static_cast<int>(widths[j])) << row[j];
      os << (j + 1 < row.size() ? "  " : "");
    }
    os << "\n";
  }
  return os.str();
}

Report parse_csv(const std::string& text) {
  Report report;
  std::istringstream is(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string key = "seed=";
      auto pos = line.find(key);
      if (pos != std::string::npos) {
        report.seed = std::stoull(line.substr(pos + key.size()));
      }
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader) {
        throw std::invalid_argument("parse_csv: unexpected header '" + line +
                                    "'");
      }
      header_seen = true;
      continue;
    }
    auto cells = split_commas(line);
    if (cells.size() != 8) {
      throw std::invalid_argument("parse_csv: expected 8 cells, got row '" +
                                  line + "'");
    }
    ReportRow r;
    r.alpha = parse_cell_double(cells[0]);
    r.cls = parse_cell_string(cells[1]);
    r.branch = parse_cell_string(cells[2]);
    r.bound = parse_cell_double(cells[3]);
    r.attained = parse_cell_double(cells[4]);
    r.numeric_max = parse_cell_double(cells[5]);
    r.gap = parse_cell_double(cells[6]);
    r.margin = parse_cell_double(cells[7]);
    report.rows.push_back(std::move(r));
  }
  return report;
}

void write_report(std::ostream& os, const Report& report,
                  const std::string& format) {
  if (format == "csv") {
    os << to_csv(report);
  } else if (format == "json") {
    os << to_json(report);
  } else if (format == "text") {
    os << to_text(report);
  } else {
    throw std::invalid_argument("write_report: unknown format '" + format +
                                "'");
  }
}

}  // namespace loghankel

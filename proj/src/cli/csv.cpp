#include "rddi/cli/csv.hpp"

#include <cmath>
#include <cstdio>

namespace rddi::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

void CsvWriter::comment(const std::string& line) { out_ << "# " << line << '\n'; }

void CsvWriter::columns(const std::vector<std::pair<std::string, std::string>>& names) {
  for (const auto& [name, description] : names) comment("column " + name + ": " + description);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << names[i].first;
  }
  out_ << '\n';
}

void CsvWriter::separator() {
  if (row_started_) out_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::field(double value) {
  separator();
  out_ << format_number(value);
  return *this;
}

CsvWriter& CsvWriter::field(const std::string& value) {
  separator();
  // errors may carry commas; quote them
  if (value.find_first_of(",\"\n") != std::string::npos) {
    out_ << '"';
    for (char ch : value) {
      if (ch == '"') out_ << '"';
      out_ << (ch == '\n' ? ' ' : ch);
    }
    out_ << '"';
  } else {
    out_ << value;
  }
  return *this;
}

CsvWriter& CsvWriter::field(bool value) {
  separator();
  out_ << (value ? "true" : "false");
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
}

}  // namespace rddi::cli

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace rddi::cli {

/// 15 significant digits, "nan"/"inf" spelled out.
std::string format_number(double value);

/// CSV with a '#'-prefixed provenance header.
class CsvWriter {
public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(const std::string& line);
  void columns(const std::vector<std::pair<std::string, std::string>>& names_and_descriptions);

  CsvWriter& field(double value);
  CsvWriter& field(const std::string& value);
  CsvWriter& field(const char* value) { return field(std::string(value)); }
  CsvWriter& field(bool value);
  void end_row();

private:
  void separator();

  std::ostream& out_;
  bool row_started_ = false;
};

}  // namespace rddi::cli

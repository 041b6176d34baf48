#pragma once

#include <string>
#include <vector>

namespace rotns {

/// Shortest round-trippable decimal form of a double ("%.17g").
std::string format_double(double v);

/// Column-named table rendered as CSV with a header row.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const noexcept { return header_; }
  std::size_t rows() const noexcept { return rows_.size(); }

  /// Appends a row of preformatted cells; the width must match the header.
  void add_row(std::vector<std::string> cells);
  void add_row(const std::vector<double>& values);

  /// Throws if the table has no rows.
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void write_csv(const std::string& path, const CsvTable& table);

/// Writes bytes to a file, replacing it.
void write_text(const std::string& path, const std::string& text);

}  // namespace rotns

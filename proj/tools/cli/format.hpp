#ifndef SIVALLEY_CLI_FORMAT_HPP
#define SIVALLEY_CLI_FORMAT_HPP

// Locale-free number formatting, RFC 4180 CSV tables and content hashes.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sivalley::cli {

/// Shortest round-trip decimal form ("inf"/"-inf"/"nan" for non-finite).
std::string format_number(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  CsvTable& add(double x);
  CsvTable& add(long long x);
  CsvTable& add(const std::string& s);
  void end_row();

  std::size_t rows() const { return rows_; }
  const std::vector<std::string>& header() const { return header_; }
  /// CRLF line endings, fields quoted only when needed.
  std::string text() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::string> current_;
  std::string body_;
  std::size_t rows_ = 0;
};

std::string csv_field(std::string_view s);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

}  // namespace sivalley::cli

#endif  // SIVALLEY_CLI_FORMAT_HPP

#include "cli/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "sivalley/errors.hpp"

namespace sivalley::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable& CsvTable::add(double x) {
  current_.push_back(format_number(x));
  return *this;
}

CsvTable& CsvTable::add(long long x) {
  current_.push_back(std::to_string(x));
  return *this;
}

CsvTable& CsvTable::add(const std::string& s) {
  current_.push_back(csv_field(s));
  return *this;
}

void CsvTable::end_row() {
  if (current_.size() != header_.size()) {
    throw Error("CSV row has " + std::to_string(current_.size()) + " fields, header has " +
                std::to_string(header_.size()));
  }
  for (std::size_t i = 0; i < current_.size(); ++i) body_ += (i ? "," : "") + current_[i];
  body_ += "\r\n";
  current_.clear();
  ++rows_;
}

std::string CsvTable::text() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) out += (i ? "," : "") + csv_field(header_[i]);
  return out + "\r\n" + body_;
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sivalley::cli

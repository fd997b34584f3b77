#pragma once

#include <string>
#include <vector>

namespace aoisim {

// 6-significant-digit rendering used for every numeric CSV field, so golden
// files are stable across platforms.
std::string format_g6(double x);

// Accumulates comment lines (`# key = value`), one header row and data rows,
// then writes the file atomically (temp file + rename).
class CsvWriter {
 public:
  void comment(const std::string& key, const std::string& value);
  void header(const std::vector<std::string>& names);
  void row(const std::vector<std::string>& fields);
  std::string str() const;
  void write_file(const std::string& path) const;

 private:
  std::string comments_;
  std::string body_;
  std::size_t n_cols_ = 0;
};

}  // namespace aoisim

#include "aoisim/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "aoisim/errors.hpp"

namespace aoisim {

std::string format_g6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void CsvWriter::comment(const std::string& key, const std::string& value) {
  comments_ += "# " + key + " = " + value + "\n";
}

void CsvWriter::header(const std::vector<std::string>& names) {
  if (n_cols_ != 0) throw ValidationError("csv header already written");
  n_cols_ = names.size();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) body_ += ',';
    body_ += names[i];
  }
  body_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != n_cols_)
    throw ValidationError("csv row has wrong column count");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) body_ += ',';
    body_ += fields[i];
  }
  body_ += '\n';
}

std::string CsvWriter::str() const { return comments_ + body_; }

void CsvWriter::write_file(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open " + tmp + " for writing");
    out << str();
    if (!out) throw ValidationError("failed writing " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw ValidationError("cannot move " + tmp + " to " + path + ": " +
                          ec.message());
}

}  // namespace aoisim

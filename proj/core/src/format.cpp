#include "cmaf/format.hpp"

#include <cstdio>
#include <fstream>

#include "cmaf/errors.hpp"

namespace cmaf {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) text_ += ',';
    text_ += header[i];
  }
  text_ += '\n';
}

void CsvWriter::append(const std::vector<double>& row) {
  if (row.size() != columns_) throw DomainError("CsvWriter: row width mismatch");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) text_ += ',';
    text_ += format_number(row[i]);
  }
  text_ += '\n';
}

void CsvWriter::write(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError("CsvWriter: cannot open " + path);
  os << text_;
}

}  // namespace cmaf

#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace cmaf {

/// Decimal rendering with 17 significant digits, '.' decimal separator,
/// independent of any locale. Identical inputs give identical bytes.
std::string format_number(double v);

/// value * r0^dim, mapping internal natural units (r0 = 1) to physical ones.
/// dim is the length dimension of the quantity (+1 lengths, -1 expansions,
/// -2 curvatures, 0 dimensionless).
inline double scale_dimension(double value, int dim, double r0) {
  return value * std::pow(r0, dim);
}

/// Minimal CSV emitter with deterministic float formatting.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void append(const std::vector<double>& row);
  const std::string& text() const { return text_; }
  void write(const std::string& path) const;

 private:
  std::size_t columns_;
  std::string text_;
};

}  // namespace cmaf

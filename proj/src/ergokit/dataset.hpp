#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "ergokit/errors.hpp"

namespace ergokit {

// Columnar numeric payload plus a JSON metadata header. Serialization is
// byte-deterministic: fixed key order, 17-significant-digit numbers, no
// clocks or addresses.
class Dataset {
public:
  Dataset(std::string scenario, nlohmann::ordered_json parameters);

  void add_column(const std::string& name, std::vector<double> values);
  void add_complex_column(const std::string& name,
                          const std::vector<std::complex<double>>& values);
  void note(const std::string& text);

  const std::string& scenario() const { return scenario_; }
  size_t column_count() const { return names_.size(); }
  size_t row_count() const;
  const std::vector<std::string>& column_names() const { return names_; }
  const std::vector<double>& column(const std::string& name) const;

  // Line 1: "# ergokit <version> scenario=<name>"; line 2: comma-separated
  // headers; then one row per sample, %.17g.
  std::string to_csv() const;

  // {"metadata": {...}, "columns": {...}} with insertion-ordered keys.
  std::string to_json() const;

private:
  std::string scenario_;
  nlohmann::ordered_json metadata_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

std::string format_17g(double v);

}  // namespace ergokit

#include "ergokit/dataset.hpp"

#include <cstdio>

#include "ergokit/version.hpp"

namespace ergokit {

Dataset::Dataset(std::string scenario, nlohmann::ordered_json parameters)
    : scenario_(std::move(scenario)) {
  metadata_["tool"] = "ergokit";
  metadata_["version"] = kVersion;
  metadata_["scenario"] = scenario_;
  metadata_["parameters"] = std::move(parameters);
  metadata_["notes"] = nlohmann::ordered_json::array();
}

void Dataset::add_column(const std::string& name, std::vector<double> values) {
  if (!columns_.empty() && values.size() != columns_.front().size())
    throw BadConfig("column '" + name + "' length differs from the dataset");
  names_.push_back(name);
  columns_.push_back(std::move(values));
}

void Dataset::add_complex_column(
    const std::string& name, const std::vector<std::complex<double>>& values) {
  std::vector<double> re(values.size()), im(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    re[i] = values[i].real();
    im[i] = values[i].imag();
  }
  add_column(name + "_re", std::move(re));
  add_column(name + "_im", std::move(im));
}

void Dataset::note(const std::string& text) { metadata_["notes"].push_back(text); }

size_t Dataset::row_count() const {
  return columns_.empty() ? 0 : columns_.front().size();
}

const std::vector<double>& Dataset::column(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return columns_[i];
  throw BadConfig("no column named '" + name + "'");
}

std::string format_17g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Dataset::to_csv() const {
  std::string out = "# ergokit ";
  out += kVersion;
  out += " scenario=";
  out += scenario_;
  out += '\n';
  for (size_t j = 0; j < names_.size(); ++j) {
    if (j) out += ',';
    out += names_[j];
  }
  out += '\n';
  const size_t rows = row_count();
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < columns_.size(); ++j) {
      if (j) out += ',';
      out += format_17g(columns_[j][i]);
    }
    out += '\n';
  }
  return out;
}

std::string Dataset::to_json() const {
  nlohmann::ordered_json root;
  root["metadata"] = metadata_;
  nlohmann::ordered_json cols;
  for (size_t j = 0; j < names_.size(); ++j) cols[names_[j]] = columns_[j];
  root["columns"] = std::move(cols);
  return root.dump(2) + "\n";
}

}  // namespace ergokit

#include "qosc/cli_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qosc {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + ": '" + text + "'");
  }
  if (consumed != text.size()) {
    throw std::invalid_argument("cannot parse " + what + ": '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<double> parse_w_range(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) {
    throw std::invalid_argument("w-range must be A:B:STEP, got '" + spec + "'");
  }
  const double a = parse_double(parts[0], "w-range start");
  const double b = parse_double(parts[1], "w-range end");
  const double step = parse_double(parts[2], "w-range step");
  if (!(step > 0.0)) {
    throw std::invalid_argument("w-range step must be positive");
  }
  if (b < a) {
    throw std::invalid_argument("w-range end must be >= start");
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double w = a + i * step;
    if (w > b + 0.5 * step) break;
    grid.push_back(std::min(w, b));
  }
  return grid;
}

std::vector<std::pair<std::string, double>> parse_tol_list(
    const std::string& text) {
  std::vector<std::pair<std::string, double>> out;
  for (const std::string& entry : split(text, ',')) {
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("tolerance override must be name=value: '" +
                                  entry + "'");
    }
    out.emplace_back(entry.substr(0, eq),
                     parse_double(entry.substr(eq + 1), "tolerance value"));
  }
  return out;
}

void apply_tol_overrides(Tolerances& tol, const std::string& text) {
  for (const auto& [name, value] : parse_tol_list(text)) {
    tol.set(name, value);
  }
}

void write_table(const Table& t, const std::string& format,
                 const std::optional<std::string>& out_path) {
  std::string payload;
  if (format == "csv") {
    payload = to_csv(t);
  } else if (format == "json") {
    payload = to_json(t);
    payload += '\n';
  } else {
    throw std::invalid_argument("format must be csv or json, got '" + format +
                                "'");
  }
  if (out_path.has_value()) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) {
      throw std::invalid_argument("cannot open output file: " + *out_path);
    }
    out << payload;
  } else {
    std::cout << payload;
  }
}

}  // namespace qosc

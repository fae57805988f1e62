#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace qosc {

using Cell = std::variant<std::int64_t, double, std::string>;

// Column-labelled rectangular result set used by the CLI emitters.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

// CSV with a header row. Doubles use shortest round-trip formatting (%.17g);
// strings containing separators or quotes are quoted with doubled quotes.
std::string to_csv(const Table& table);

// JSON array of objects keyed by column name. NaN and infinities map to null.
std::string to_json(const Table& table, int indent = 2);

std::string format_double(double x);

}  // namespace qosc

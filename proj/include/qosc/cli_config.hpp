#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qosc/check.hpp"
#include "qosc/table.hpp"

namespace qosc {

// "A:B:STEP" -> inclusive grid {A, A+STEP, ..., B} (within half a step of B).
// Malformed specs throw std::invalid_argument.
std::vector<double> parse_w_range(const std::string& spec);

// "name=value,name=value,..." -> pairs; malformed entries throw
// std::invalid_argument.
std::vector<std::pair<std::string, double>> parse_tol_list(
    const std::string& text);

// Applies QOSC_TOL_OVERRIDE-style text ("name=value,...") to a tolerance set.
void apply_tol_overrides(Tolerances& tol, const std::string& text);

// Writes the table as "csv" or "json" to stdout or, when set, to `out_path`.
void write_table(const Table& t, const std::string& format,
                 const std::optional<std::string>& out_path);

}  // namespace qosc

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace nlgreen::cli {

/// A rectangular numeric table; absent cells are written as empty CSV fields
/// and JSON nulls.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

/// %.17g
std::string format_number(double v);

void write_csv(const Table& table, std::ostream& out);
nlohmann::json table_to_json(const Table& table);

/// Writes to `path`, or to `fallback` when `path` is empty.
void emit(const std::string& text, const std::string& path, std::ostream& fallback);

std::string csv_string(const Table& table);

}  // namespace nlgreen::cli

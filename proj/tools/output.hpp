#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace kostant::cli {

inline constexpr const char* kSchemaVersion = "1.0";

// A cell keeps its CSV text; the kind decides how it is written to JSON.
struct Cell {
  enum class Kind { Text, Integer, Real, Boolean };
  Kind kind = Kind::Text;
  std::string text;

  static Cell str(std::string s) { return {Kind::Text, std::move(s)}; }
  static Cell integer(long long v) { return {Kind::Integer, std::to_string(v)}; }
  static Cell real(double v);  // %.12g
  static Cell boolean(bool v) { return {Kind::Boolean, v ? "true" : "false"}; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  Table payload;
};

enum class Format { Csv, Json };

std::string format_real(double v);
std::string csv_escape(const std::string& field);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const OutputRecord& record);
void write_record(std::ostream& out, const OutputRecord& record, Format format);

}  // namespace kostant::cli

#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace kostant::cli {

using ojson = nlohmann::ordered_json;

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Cell Cell::real(double v) { return {Kind::Real, format_real(v)}; }

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::logic_error("row has " + std::to_string(row.size()) + " cells, table has " +
                           std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&](auto&& get, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out << ',';
      out << csv_escape(get(i));
    }
    out << '\n';
  };
  line([&](std::size_t i) -> const std::string& { return table.columns[i]; }, table.columns.size());
  for (const auto& row : table.rows)
    line([&](std::size_t i) -> const std::string& { return row[i].text; }, row.size());
}

namespace {

ojson cell_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Integer: return std::stoll(c.text);
    // Re-parsing the %.12g text keeps the printed digits: the shortest
    // round-trip form of that double is the same decimal.
    case Cell::Kind::Real:
      if (c.text == "nan" || c.text == "inf" || c.text == "-inf") return c.text;
      return std::stod(c.text);
    case Cell::Kind::Boolean: return c.text == "true";
    case Cell::Kind::Text: break;
  }
  return c.text;
}

}  // namespace

void write_json(std::ostream& out, const OutputRecord& record) {
  ojson params = ojson::object();
  for (const auto& [k, v] : record.parameters) params[k] = v;
  ojson rows = ojson::array();
  for (const auto& row : record.payload.rows) {
    ojson obj = ojson::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[record.payload.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  ojson doc = ojson::object();
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = record.command;
  doc["parameters"] = std::move(params);
  doc["payload"] = ojson{{"columns", record.payload.columns}, {"rows", std::move(rows)}};
  out << doc.dump(2) << '\n';
}

void write_record(std::ostream& out, const OutputRecord& record, Format format) {
  if (format == Format::Json)
    write_json(out, record);
  else
    write_csv(out, record.payload);
}

}  // namespace kostant::cli

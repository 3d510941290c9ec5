#pragma once

#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

namespace oscsum::cli {

using Json = nlohmann::ordered_json;

/// 12 significant digits, '.' as decimal point whatever the locale.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

/// The same rounding as the CSV output; non-finite values become null.
inline Json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  const std::string s = format_number(v);
  double back = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), back);
  return back;
}

/// What a command produced, in a form both writers understand.
struct Report {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::vector<std::string> columns;
  // Each cell is already formatted text; `numeric` marks columns holding
  // numbers for the JSON writer.
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> numeric;
  Json summary = Json::object();
  bool pass = true;
};

inline void write_csv(const Report& r, std::ostream& out) {
  for (std::size_t c = 0; c < r.columns.size(); ++c)
    out << (c ? "," : "") << r.columns[c];
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << row[c];
    out << '\n';
  }
  for (const auto& [key, val] : r.summary.items()) {
    out << "# " << key << '=';
    if (val.is_number_float())
      out << format_number(val.get<double>());
    else if (val.is_string())
      out << val.get<std::string>();
    else
      out << val.dump();
    out << '\n';
  }
  out << "# pass=" << (r.pass ? "true" : "false") << '\n';
}

inline Json cell_json(const std::string& text, bool numeric) {
  if (!numeric) return text;
  if (text == "nan" || text == "inf" || text == "-inf") return nullptr;
  if (text == "true") return true;
  if (text == "false") return false;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc()) return text;
  if (text.find_first_of(".eE") == std::string::npos && v == std::floor(v))
    return static_cast<std::int64_t>(v);
  return v;
}

inline void write_json(const Report& r, std::ostream& out) {
  Json j;
  j["command"] = r.command;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["seed"] = r.seed;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c)
      obj[r.columns[c]] = cell_json(row[c], r.numeric[c]);
    rows.push_back(obj);
  }
  j["rows"] = rows;
  j["summary"] = r.summary;
  j["pass"] = r.pass;
  out << j.dump(2) << '\n';
}

}  // namespace oscsum::cli

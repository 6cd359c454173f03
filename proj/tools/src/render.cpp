#include "render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace liouville::app {

namespace {

std::string scalar(const Report& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
    return buf;
  }
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
  return s + "]";
}

bool is_table(const Report& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const Report& e) { return e.is_object(); });
}

void table(const Report& rows, const std::string& indent, std::ostream& out) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& item : row.items())
      if (std::find(columns.begin(), columns.end(), item.key()) == columns.end())
        columns.push_back(item.key());
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? scalar(row[columns[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s = indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += line[c];
      if (c + 1 < line.size()) s += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << s << '\n';
  };
  emit(columns);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '-'));
  emit(rule);
  for (const auto& line : cells) emit(line);
}

void object(const Report& obj, const std::string& indent, std::ostream& out) {
  std::size_t key_width = 0;
  for (const auto& item : obj.items())
    if (!item.value().is_object() && !is_table(item.value()))
      key_width = std::max(key_width, item.key().size());
  for (const auto& item : obj.items()) {
    const Report& v = item.value();
    if (v.is_object()) {
      out << indent << item.key() << ":\n";
      object(v, indent + "  ", out);
    } else if (is_table(v)) {
      out << indent << item.key() << ":\n";
      table(v, indent + "  ", out);
    } else {
      out << indent << item.key() << std::string(key_width - item.key().size() + 2, ' ')
          << scalar(v) << '\n';
    }
  }
}

} // namespace

void render_text(const Report& report, std::ostream& out) { object(report, "", out); }

} // namespace liouville::app

#include "stepqa/markdown.hpp"

#include <sstream>

#include "stepqa/text_util.hpp"

namespace stepqa {

std::string render_markdown_table(const Table& t) {
  t.validate();
  std::string out;
  auto emit_row = [&out](const std::vector<std::string>& row) {
    out += '|';
    for (const auto& cell : row) {
      out += ' ';
      out += cell;
      out += " |";
    }
  };
  emit_row(t.rows[0]);
  out += '\n';
  out += '|';
  for (size_t i = 0; i < t.col_count(); ++i) out += "---|";
  for (size_t r = 1; r < t.rows.size(); ++r) {
    out += '\n';
    emit_row(t.rows[r]);
  }
  return out;
}

std::vector<std::string> split_table_row(std::string_view line) {
  std::vector<std::string> cells;
  std::string current;
  std::string_view s = line;
  // strip at most one leading and one trailing bare '|'
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  if (begin < end && s[begin] == '|') ++begin;
  if (end > begin && s[end - 1] == '|' && (end - 1 == 0 || s[end - 2] != '\\')) --end;

  for (size_t i = begin; i < end; ++i) {
    if (s[i] == '\\' && i + 1 < end) {
      current += s[i];
      current += s[i + 1];
      ++i;
      continue;
    }
    if (s[i] == '|') {
      cells.push_back(trim(current));
      current.clear();
    } else {
      current += s[i];
    }
  }
  cells.push_back(trim(current));
  return cells;
}

bool is_separator_row(const std::vector<std::string>& cells) {
  if (cells.empty()) return false;
  for (const auto& c : cells) {
    if (c.empty()) return false;
    for (char ch : c) {
      if (ch != '-' && ch != ':') return false;
    }
    if (c.find('-') == std::string::npos) return false;
  }
  return true;
}

std::optional<Table> parse_markdown_table(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool in_table = false;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    const bool is_row = !t.empty() && t.front() == '|';
    if (!is_row) {
      if (in_table) break;  // first table only
      continue;
    }
    in_table = true;
    auto cells = split_table_row(t);
    if (is_separator_row(cells)) continue;
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) return std::nullopt;
  const size_t width = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != width) return std::nullopt;
  }
  return Table{std::move(rows)};
}

}  // namespace stepqa

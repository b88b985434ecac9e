#include "stepqa/text_util.hpp"

#include <cctype>

namespace stepqa {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string escape_cell(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

std::string unescape_cell(std::string_view cell) {
  std::string out;
  out.reserve(cell.size());
  for (size_t i = 0; i < cell.size(); ++i) {
    if (cell[i] == '\\' && i + 1 < cell.size() && cell[i + 1] == '|') {
      out += '|';
      ++i;
    } else {
      out += cell[i];
    }
  }
  return out;
}

bool has_unescaped_pipe(std::string_view s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\') {
      ++i;  // skip escaped char
      continue;
    }
    if (s[i] == '|') return true;
  }
  return false;
}

std::string normalize_cell(std::string_view raw) {
  std::string collapsed;
  collapsed.reserve(raw.size());
  bool last_was_newline = false;
  for (char c : raw) {
    if (c == '\n' || c == '\r') {
      if (!last_was_newline) collapsed += ' ';
      last_was_newline = true;
    } else {
      collapsed += c;
      last_was_newline = false;
    }
  }
  return escape_cell(trim(collapsed));
}

std::vector<std::string> split_hash_items(std::string_view s) {
  std::vector<std::string> items;
  size_t start = 0;
  while (true) {
    size_t pos = s.find('#', start);
    if (pos == std::string_view::npos) {
      items.push_back(trim(s.substr(start)));
      break;
    }
    items.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return items;
}

std::string join_hash_items(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += " # ";
    out += items[i];
  }
  return out;
}

}  // namespace stepqa

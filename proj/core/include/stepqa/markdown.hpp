#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stepqa/types.hpp"

namespace stepqa {

// First row becomes the header, followed by a |---| separator row, then the
// body. Cells are emitted verbatim (they are already in escaped cell form).
std::string render_markdown_table(const Table& t);

// Inverse of render_markdown_table for well-formed input: splits rows on
// unescaped pipes, drops the separator row, keeps cells in escaped form.
// Returns nullopt when the text contains no parseable table.
std::optional<Table> parse_markdown_table(std::string_view text);

// Splits one "| a | b |" row into trimmed cells, honoring "\|" escapes.
std::vector<std::string> split_table_row(std::string_view line);

// True for separator rows like |---|---| (dashes with optional colons).
bool is_separator_row(const std::vector<std::string>& cells);

}  // namespace stepqa

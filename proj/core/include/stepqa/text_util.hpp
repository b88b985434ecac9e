#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stepqa {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Single shared escape table for markdown cells: '|' <-> "\|".
// Escaping and unescaping must stay exact inverses; both the prompt builder
// and the response parser go through these two functions.
std::string escape_cell(std::string_view raw);
std::string unescape_cell(std::string_view cell);

// True if the string contains a '|' that is not preceded by a backslash.
bool has_unescaped_pipe(std::string_view s);

// Cell normalization applied at ingest: trim, collapse interior newlines to
// a single space, escape pipes.
std::string normalize_cell(std::string_view raw);

// Splits on '#' and trims each piece (the " # " multi-value convention).
std::vector<std::string> split_hash_items(std::string_view s);

// Joins with " # ".
std::string join_hash_items(const std::vector<std::string>& items);

}  // namespace stepqa

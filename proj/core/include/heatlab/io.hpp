#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace heatlab::io {

/// Shortest round-trip decimal representation of a double.
std::string fmt(double x);

/// Writes via a temporary file in the same directory, then renames, so a
/// reader never observes a partial file.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

/// A comma-separated table with a header row. Cells are preformatted strings;
/// use fmt() for numbers so output is deterministic.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
  std::string str() const;
};

}  // namespace heatlab::io

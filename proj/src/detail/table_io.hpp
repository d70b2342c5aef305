#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "zetalaurent/numerics/precision.hpp"

namespace zl::detail {

// Serialized coefficient table before numeric parsing. `tag_key` is
// "convention" for gamma tables and "provenance" for eta tables.
struct RawTable {
  std::string tag_key;
  std::string tag_value;
  Bits precision_bits = 0;
  int n_max = 0;
  std::vector<std::string> values;
};

std::string write_json(const RawTable& table);
std::string write_csv(const RawTable& table);

// Detects JSON by a leading '{', CSV otherwise. Throws FormatError or
// TableError.
RawTable read_table(std::string_view text, const std::string& tag_key);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace zl::detail

#ifndef MOMARK_IO_HPP
#define MOMARK_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace momark::io {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

/// Strict parse of a whole field; throws IoError on trailing garbage.
double parse_double(std::string_view text);
std::int64_t parse_int(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep);

/// Strips a trailing '\r' (files written on other platforms).
std::string_view chomp(std::string_view line);

/// Writes to a sibling temp file and renames over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

} // namespace momark::io

#endif

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace wandering {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partially written file. Throws Io on failure.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace wandering

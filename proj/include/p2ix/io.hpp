#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace p2ix {

/// Reads a whole file as bytes. Throws Error when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes bytes to a file, replacing it. Throws Error on failure.
void write_file(const std::filesystem::path& path, std::string_view data);

}  // namespace p2ix

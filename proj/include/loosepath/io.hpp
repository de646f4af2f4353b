#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "loosepath/core.hpp"

namespace loosepath {

/// Malformed input files: bad JSON, wrong fields, inconsistent dimensions.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// blue_bits encoding: byte i holds ranks 8i..8i+7 (rank 8i in the least
/// significant bit), each byte written as two lowercase hex digits.
std::string coloring_to_hex(const Coloring& coloring);
Coloring coloring_from_hex(int n_vertices, int r, const std::string& hex);

std::string coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const std::string& text);

std::string witness_to_json(const Witness& witness);
Witness witness_from_json(const std::string& text);

std::string read_file(const std::filesystem::path& path);
/// Writes atomically enough for batch use: truncate then write.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace loosepath

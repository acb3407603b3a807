#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lrclab/code.hpp"

namespace lrclab {

/// Matrix text format: a header line "q rows cols", then `rows` lines of
/// `cols` decimal field values separated by single spaces. Parsing accepts any
/// whitespace and '#' comments; writing is canonical, so write(parse(write(m)))
/// reproduces the same bytes.
std::string write_matrix(const GFMatrix& m);
GFMatrix parse_matrix(std::string_view text);

/// Code format: a line "G" followed by the generator block, then a line "H"
/// followed by the parity-check block. Parsing also accepts a bare matrix
/// (taken as a generator) or a lone "H" block.
std::string write_code(const LinearCode& c);
LinearCode parse_code(std::string_view text);

GFMatrix read_matrix_file(const std::filesystem::path& path);
LinearCode read_code_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace lrclab

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "edr/matrix.hpp"

namespace edr {

enum ExitCode : int {
  exit_ok = 0,
  exit_precondition = 1,
  exit_parse = 2,
  exit_internal = 3,
};

/// Inline JSON ({"ring": ..., "rows": [...]} or a bare array of rows), a
/// path to a file holding either form, or a whitespace grid with one row
/// per line. `ring` may be empty when the JSON names the ring. Throws
/// ParseError on ragged rows and on a ring mismatch.
Matrix read_matrix(std::string_view source, std::string_view ring);

/// Splits "a,b,[c,d]" at top-level commas.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// Runs `edr` with args excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edr

#pragma once

// Flat-file formats. In all of them "@" denotes the empty string, "#" starts a
// comment, and blank lines are ignored. Errors carry the source and line number.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "prand/complexity.hpp"
#include "prand/levin_schnorr.hpp"
#include "prand/modes.hpp"
#include "prand/premeasure.hpp"
#include "prand/strings.hpp"

namespace prand::io {

/// Whole file as text; throws FormatError when it cannot be opened.
std::string slurp(const std::string& path);

/// One string per line.
StringSet parse_string_set(std::string_view text, const std::string& source = "<input>");
/// "<string> <nat>" per line.
HSpec parse_h_table(std::string_view text, const std::string& source = "<input>");
/// "[tree <i>]" headers, each followed by the tree's strings.
TreeFamily parse_tree_family(std::string_view text, const std::string& source = "<input>");
/// "<string> <signed-int>" per line.
FiniteComplexity parse_complexity(std::string_view text, const std::string& source = "<input>");
/// "<desc> <output>" per line.
Mode parse_mode(std::string_view text, const std::string& source = "<input>");
/// "[level <i>]" headers, each followed by the level's strings. Absent levels are ∅.
TestFamily parse_test_family(std::string_view text, const std::string& source = "<input>");
/// ASCII 0/1 with whitespace ignored, truncated to limit characters when given.
BinaryString parse_bitstream(std::string_view text, std::optional<std::size_t> limit = std::nullopt,
                             const std::string& source = "<input>");

StringSet read_string_set(const std::string& path);
HSpec read_h_table(const std::string& path);
TreeFamily read_tree_family(const std::string& path);
FiniteComplexity read_complexity(const std::string& path);
Mode read_mode(const std::string& path);
TestFamily read_test_family(const std::string& path);
BinaryString read_bitstream(const std::string& path, std::optional<std::size_t> limit = std::nullopt);

std::string format_complexity(const FiniteComplexity& r);
std::string format_test_family(const TestFamily& t);
std::string format_string_set(const StringSet& s);

}  // namespace prand::io

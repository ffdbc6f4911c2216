#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "regkt/fingroup.hpp"

namespace regkt {

inline constexpr std::string_view kFormatLine = "regkt-format 1";

/// Parses the text group format:
///
///   [regkt-format 1]
///   perm <degree>          followed by one generator per line, cycle notation
///   table <n>              followed by n rows of n 0-based indices
///
/// Lines starting with '#' are comments. Throws ParseError on malformed input
/// and InvalidGroup when a table fails the group axioms.
FiniteGroup parse_group(std::string_view text, std::string name = "",
                        std::size_t cap = kDefaultGroupCap);

FiniteGroup read_group_file(const std::filesystem::path& path,
                            std::size_t cap = kDefaultGroupCap);

/// Writes `g` in the text format. Permutation groups are written by their
/// generators, everything else as a table.
std::string format_group(const FiniteGroup& g);

/// Resolves one element written in the group's own notation: cycle notation
/// for permutation groups, a 0-based index for table groups.
Elem parse_element(const FiniteGroup& g, std::string_view token);

/// The ';'-separated element list `spec`.
std::vector<Elem> parse_element_list(const FiniteGroup& g, std::string_view spec);
/// Normal closure of the ';'-separated element list `spec`.
Subgroup parse_normal_spec(const FiniteGroup& g, std::string_view spec);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace regkt

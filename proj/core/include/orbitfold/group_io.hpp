#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orbitfold/group.hpp"

namespace orbitfold {

/// Parses the group file format:
///
///   # comment
///   degree 12
///   gen (1,2,3)(4,5)
///
/// The degree line comes first; '#' starts a comment anywhere on a line.
/// Throws Malformed and the permutation parse errors.
PermutationGroup parse_group_text(std::string_view text);

/// Throws MissingData when the file cannot be read.
PermutationGroup read_group_file(const std::filesystem::path& path);

/// Inverse of parse_group_text (identity generators omitted).
std::string format_group_text(const PermutationGroup& g);

}  // namespace orbitfold

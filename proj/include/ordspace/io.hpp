#pragma once

#include "ordspace/balls.hpp"
#include "ordspace/core.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ordspace {

/// Whole file contents; throws ValidationError when unreadable.
std::string read_file(const std::string& path);

/// Rank-matrix text: first line `n k`, then n rows of n integers. Blank
/// lines and lines starting with '#' are ignored. Syntax problems throw
/// ParseError with 1-based line/column; semantic ones ValidationError.
OrdinalSpace parse_rank_matrix(std::string_view text);

std::string format_rank_matrix(const OrdinalSpace& s);

/// n rows of n comma-separated entries, each a decimal or `p/q` literal.
DistanceMatrix parse_distance_csv(std::string_view text);

std::string format_distance_csv(const DistanceMatrix& d);

/// Lines `x y z w REL` with 1-based points and REL in {LT, EQ, GT}. An
/// optional first line `n N` fixes the point count; otherwise the largest
/// index is used.
ComparisonList parse_comparisons(std::string_view text);

std::string format_comparisons(const ComparisonList& c);

/// One set per line as 1-based point indices, e.g. `1 2 3`.
std::vector<PointSet> parse_set_family(std::string_view text);

}  // namespace ordspace

#pragma once

#include <cstdint>
#include <optional>

#include "gridobs/core.hpp"

namespace gridobs {

// One section of a height-b horizontal strip, between two consecutive
// vertex columns. Masks are indexed by column offset from left_column;
// bit y set means the point is impassable (obstacle, or any vertex when
// used as a path interior point).
struct StripSection {
  Coord left_column = 0;
  Coord right_column = 0;
  int height = 0;
  std::vector<std::uint64_t> blocked;   // obstacle or vertex
  std::vector<std::uint64_t> obstacle;  // obstacle only (endpoint passability)
};

StripSection make_section(const Representation& rep, int b, Coord left, Coord right);

// Upper/lower envelope of the monotone passable paths from (left,i) to
// (right,j): with R the union of all such paths, upper is the greedy path
// hugging the top of R and lower the one hugging the bottom. Absent iff
// no path exists.
std::optional<std::pair<LatticePath, LatticePath>> envelopes(const StripSection& s,
                                                             int i, int j);

// Keep only the envelope union in every section (plus the vertex columns);
// output is default=blocked over the vertex-column span of the strip.
Representation compress_envelopes(const Representation& strip_rep, int b);

// Collapse runs of more than three identical interior columns to exactly
// three, remapping x-coordinates (vertices included).
Representation compress_bends(const Representation& embd_prime, int b);

// compress_envelopes then compress_bends.
Representation compress_strip(const Representation& strip_rep, int b);

// Swap the two axes of a 2D representation (vertical-strip variant).
Representation transpose(const Representation& rep);

}  // namespace gridobs

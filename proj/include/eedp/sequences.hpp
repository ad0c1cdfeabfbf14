// Erdos-Szekeres style sub-sequence extraction.
#pragma once

#include <vector>

namespace eedp {

struct Subsequence {
    std::vector<int> index;  // strictly increasing positions
    std::vector<int> value;
    bool increasing = true;
};

// Strictly increasing of length s, else strictly decreasing of length r.
// Values must be distinct and n >= (s-1)(r-1)+1; throws std::invalid_argument
// otherwise. Lowest positions first, so an increasing input yields its prefix.
Subsequence es_monotone(const std::vector<int>& seq, int s, int r);

// Element j may only reoccur in the gap right before it; every other gap
// between chosen positions is free of all chosen values.
bool is_non_repetitive(const std::vector<int>& seq, const std::vector<int>& index);

// Strictly monotone, non-repetitive sub-sequence of length s. No value may
// occur more than c times. Found by lowest-position-first search; throws
// std::invalid_argument when none exists and n < (s c^s - 1)^2.
Subsequence es_nonrepetitive(const std::vector<int>& seq, int c, int s);

}  // namespace eedp

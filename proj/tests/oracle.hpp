#pragma once

// Naive exhaustive enumerators used as ground truth against the search
// engine. No pruning beyond canonical form (minimum vertex first, second
// vertex smaller than last), no shared code with the engine under test.

#include <vector>

#include "tricirc/embedding.hpp"

namespace oracle {

// Every cycle of g exactly once, as a vertex sequence.
std::vector<std::vector<int>> all_cycles(const tricirc::Embedding& g);

// 0 when the graph has no cycle.
int circumference(const tricirc::Embedding& g);

// Outer independence plus degree-3 outside, checked directly.
bool good(const tricirc::Embedding& g, const std::vector<int>& cycle);

// 0 when no good cycle exists.
int longest_good_cycle_length(const tricirc::Embedding& g);

}  // namespace oracle

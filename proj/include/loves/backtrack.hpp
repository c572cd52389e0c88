#pragma once

#include <array>
#include <vector>

#include "loves/digits.hpp"

namespace loves {

// A width-5 starting string whose decay chain never grows, reconstructed
// from a target final pair. The chain rows run from the target back up to
// the start.
struct BacktrackSolution {
    std::array<int, 3> params{};  // a1, a2, a3
    DigitString target;           // width 2
    DigitString row3;
    DigitString row4;
    DigitString row5;             // the starting string
};

// Enumerates all parameter triples in [0,9]^3, keeps the chains whose
// entries all lie in [0,9], and verifies each survivor by forward
// iteration. Sorted by (a1, a2, a3).
std::vector<BacktrackSolution> backtrack(int target_first, int target_second);

} // namespace loves

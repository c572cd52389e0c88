#include "loves/backtrack.hpp"

#include <stdexcept>

#include "loves/engine.hpp"

namespace loves {

namespace {

bool all_digits(std::initializer_list<int> values) {
    for (int v : values) {
        if (v < 0 || v > 9) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<BacktrackSolution> backtrack(int target_first, int target_second) {
    if (target_first < 0 || target_first > 9 || target_second < 0 || target_second > 9) {
        throw std::invalid_argument("backtrack: target digits must lie in [0, 9]");
    }
    const int s1 = target_first;
    const int s2 = target_second;

    std::vector<BacktrackSolution> solutions;
    for (int a1 = 0; a1 <= 9; ++a1) {
        for (int a2 = 0; a2 <= 9; ++a2) {
            for (int a3 = 0; a3 <= 9; ++a3) {
                const int r3[] = {a1, s1 - a1, s2 - s1 + a1};
                const int r4[] = {a2, a1 - a2, s1 - 2 * a1 + a2, s2 - 2 * s1 + 3 * a1 - a2};
                const int r5[] = {a3, a2 - a3, a1 - 2 * a2 + a3, s1 - 3 * a1 + 3 * a2 - a3,
                                  s2 - 3 * s1 + 6 * a1 - 4 * a2 + a3};
                if (!all_digits({r3[0], r3[1], r3[2]}) ||
                    !all_digits({r4[0], r4[1], r4[2], r4[3]}) ||
                    !all_digits({r5[0], r5[1], r5[2], r5[3], r5[4]})) {
                    continue;
                }
                BacktrackSolution sol;
                sol.params = {a1, a2, a3};
                sol.target = DigitString{s1, s2};
                sol.row3 = DigitString{r3[0], r3[1], r3[2]};
                sol.row4 = DigitString{r4[0], r4[1], r4[2], r4[3]};
                sol.row5 = DigitString{r5[0], r5[1], r5[2], r5[3], r5[4]};

                // Forward replay must reproduce the stored rows exactly.
                if (iterate(sol.row5) != sol.row4 || iterate(sol.row4) != sol.row3 ||
                    iterate(sol.row3) != sol.target) {
                    continue;
                }
                solutions.push_back(std::move(sol));
            }
        }
    }
    return solutions;
}

} // namespace loves

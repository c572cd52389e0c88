#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "loves/digits.hpp"

namespace loves {

// One-step bookkeeping: how many adjacent pairs carry (sum >= 10) and the
// width/magnitude the update law predicts for the next string.
struct StepStats {
    int carry_pairs = 0;
    int predicted_width = 0;
    int predicted_magnitude = 0;
    int delta_width = 0;
    int delta_magnitude = 0;
};

enum class OutcomeKind { Terminated, Looping, Divergent };

struct Outcome {
    OutcomeKind kind = OutcomeKind::Terminated;

    // Terminated
    DigitString final_string;
    int result = -1;
    int decay_length = -1;

    // Looping
    int preperiod = -1;
    int period = -1;
    std::vector<DigitString> cycle_strings;

    // Divergent
    int iterations_to_detection = -1;
    int width_at_detection = -1;
};

// Per-game history statistics.
struct ChainTrace {
    std::optional<int> decay_length;  // empty for endless games
    int max_width = 0;
    int increasing_steps = 0;
    int visited_count = 0;
};

struct ClassifyLimits {
    int max_width = 0;  // 0 means the default 2*w0 + 8
    int max_iterations = 10000;
};

struct Classification {
    Outcome outcome;
    ChainTrace trace;
};

// Thrown when the iteration cap is hit before any verdict. Callers that
// aggregate (sweeps) count these separately; nothing is ever mislabeled.
class UndeterminedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One application of the game rule: adjacent pair sums, concatenated in
// decimal, left to right.
DigitString iterate(const DigitString& s);

StepStats step_stats(const DigitString& s);

Classification classify(const DigitString& s, const ClassifyLimits& limits = {});

// Builds the initial string from raw letter counts; counts of 10 or more
// expand into their decimal digits in place.
DigitString play(std::span<const int> counts);

} // namespace loves

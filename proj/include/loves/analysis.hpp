#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "loves/engine.hpp"
#include "loves/fraction.hpp"

namespace loves {

// Thrown before any work starts when a request would exceed the configured
// enumeration budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// A family of starting strings: every string of the given width whose
// digits are all below cap. Set size is cap^width.
struct SweepSpec {
    int width = 5;
    int cap = 10;
    ClassifyLimits limits{};
    std::uint64_t budget = kDefaultBudget;
    int jobs = 1;  // 0 picks hardware concurrency
};

struct OutcomeTally {
    std::uint64_t terminated = 0;
    std::uint64_t looping = 0;
    std::uint64_t divergent = 0;
    std::uint64_t undetermined = 0;

    std::uint64_t total() const { return terminated + looping + divergent + undetermined; }
};

// Shape of one terminating chain.
struct ChainShapeRecord {
    std::uint32_t decay_length = 0;
    std::uint16_t max_width = 0;
    std::uint16_t increasing_steps = 0;
};

struct SweepReport {
    int width = 0;
    int cap = 0;
    OutcomeTally totals;
    std::array<std::uint64_t, 100> result_counts{};
    std::vector<OutcomeTally> by_magnitude;                           // index m in [0, 9w]
    std::vector<std::array<std::uint64_t, 100>> result_by_magnitude;  // same index
    std::vector<std::uint64_t> decay_length_counts;                   // index d
    std::vector<ChainShapeRecord> chain_shapes;                       // enumeration order

    std::uint64_t set_size() const { return totals.total(); }
};

// Classifies every string in the family. Aggregation is plain integer
// addition, so the result is identical for any worker count.
SweepReport sweep(const SweepSpec& spec);

struct MagnitudeProfileRow {
    int magnitude = 0;
    std::uint64_t strings = 0;
    Fraction divergent;
    Fraction looping;
};

// Fraction of strings at each magnitude with a non-terminating verdict.
std::vector<MagnitudeProfileRow> divergence_profile(const SweepReport& report);

// Aggregate one-step statistics for every string at a (width, magnitude)
// coordinate; means are exact rationals over the full population.
struct PhaseCell {
    int width = 0;
    int magnitude = 0;
    std::uint64_t string_count = 0;
    Fraction mean_delta_width;
    Fraction mean_delta_magnitude;
    Fraction mean_carry_pairs;
};

struct PhaseRange {
    int width_min = 2;
    int width_max = 6;
    int magnitude_min = 0;
    int magnitude_max = 54;
    std::uint64_t budget = kDefaultBudget;
};

std::vector<PhaseCell> phase_field(const PhaseRange& range);

// Number of digit strings (digits 0..9) of the given width and magnitude.
std::uint64_t composition_count(int width, int magnitude);

// Heuristic boundary between likely-terminating and likely-diverging
// magnitudes: 18 / (3/2)^(w-4), exact.
Fraction critical_magnitude(int width);

// Smallest magnitude that can support the given number of carrying pairs.
int min_magnitude_for_carries(int carries);

struct ResultByMagnitudeCell {
    int magnitude = 0;
    int result = 0;
    std::uint64_t count = 0;
    Fraction conditional;    // given termination at this magnitude
    Fraction unconditional;  // over all strings at this magnitude
};

std::vector<ResultByMagnitudeCell> result_by_magnitude(const SweepReport& report);

struct ChainShapeSummary {
    int width = 0;
    std::uint64_t terminating = 0;
    int max_width_reached = 0;
    std::uint32_t max_decay_length = 0;
    int max_increasing_steps = 0;
    bool decay_at_least_width_minus_2 = true;
    bool increases_below_half_decay = true;
};

ChainShapeSummary chain_shape(const SweepReport& report);

} // namespace loves

#include "loves/analysis.hpp"

#include <algorithm>
#include <thread>

namespace loves {

namespace {

std::uint64_t checked_pow(int base, int exponent, std::uint64_t budget) {
    std::uint64_t value = 1;
    for (int i = 0; i < exponent; ++i) {
        if (value > budget / static_cast<std::uint64_t>(base) + 1) {
            return budget + 1;
        }
        value *= static_cast<std::uint64_t>(base);
    }
    return value;
}

void validate(const SweepSpec& spec) {
    if (spec.width < 2) {
        throw std::invalid_argument("sweep: width must be at least 2");
    }
    if (spec.cap < 1 || spec.cap > 10) {
        throw std::invalid_argument("sweep: cap must lie in [1, 10]");
    }
}

SweepReport make_empty_report(const SweepSpec& spec) {
    SweepReport report;
    report.width = spec.width;
    report.cap = spec.cap;
    report.by_magnitude.resize(static_cast<std::size_t>(9 * spec.width + 1));
    report.result_by_magnitude.resize(static_cast<std::size_t>(9 * spec.width + 1));
    return report;
}

void record_outcome(SweepReport& report, const DigitString& s, const Classification& c) {
    const auto m = static_cast<std::size_t>(s.magnitude());
    switch (c.outcome.kind) {
        case OutcomeKind::Terminated: {
            ++report.totals.terminated;
            ++report.by_magnitude[m].terminated;
            ++report.result_counts[static_cast<std::size_t>(c.outcome.result)];
            ++report.result_by_magnitude[m][static_cast<std::size_t>(c.outcome.result)];
            const auto d = static_cast<std::size_t>(c.outcome.decay_length);
            if (report.decay_length_counts.size() <= d) {
                report.decay_length_counts.resize(d + 1, 0);
            }
            ++report.decay_length_counts[d];
            report.chain_shapes.push_back({static_cast<std::uint32_t>(c.outcome.decay_length),
                                           static_cast<std::uint16_t>(c.trace.max_width),
                                           static_cast<std::uint16_t>(c.trace.increasing_steps)});
            break;
        }
        case OutcomeKind::Looping:
            ++report.totals.looping;
            ++report.by_magnitude[m].looping;
            break;
        case OutcomeKind::Divergent:
            ++report.totals.divergent;
            ++report.by_magnitude[m].divergent;
            break;
    }
}

// Classifies the index range [begin, end) of the cap^width string family,
// in enumeration order (most significant digit varies slowest).
SweepReport sweep_range(const SweepSpec& spec, std::uint64_t begin, std::uint64_t end) {
    SweepReport report = make_empty_report(spec);
    std::vector<int> digits(static_cast<std::size_t>(spec.width), 0);
    std::uint64_t rest = begin;
    for (int pos = spec.width - 1; pos >= 0; --pos) {
        digits[static_cast<std::size_t>(pos)] = static_cast<int>(rest % spec.cap);
        rest /= static_cast<std::uint64_t>(spec.cap);
    }
    for (std::uint64_t i = begin; i < end; ++i) {
        const DigitString s = DigitString::from_digits(digits);
        try {
            record_outcome(report, s, classify(s, spec.limits));
        } catch (const UndeterminedError&) {
            ++report.totals.undetermined;
            ++report.by_magnitude[static_cast<std::size_t>(s.magnitude())].undetermined;
        }
        int pos = spec.width - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == spec.cap - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos >= 0) {
            ++digits[static_cast<std::size_t>(pos)];
        }
    }
    return report;
}

void merge_into(SweepReport& into, SweepReport&& part) {
    into.totals.terminated += part.totals.terminated;
    into.totals.looping += part.totals.looping;
    into.totals.divergent += part.totals.divergent;
    into.totals.undetermined += part.totals.undetermined;
    for (std::size_t r = 0; r < into.result_counts.size(); ++r) {
        into.result_counts[r] += part.result_counts[r];
    }
    for (std::size_t m = 0; m < into.by_magnitude.size(); ++m) {
        into.by_magnitude[m].terminated += part.by_magnitude[m].terminated;
        into.by_magnitude[m].looping += part.by_magnitude[m].looping;
        into.by_magnitude[m].divergent += part.by_magnitude[m].divergent;
        into.by_magnitude[m].undetermined += part.by_magnitude[m].undetermined;
        for (std::size_t r = 0; r < 100; ++r) {
            into.result_by_magnitude[m][r] += part.result_by_magnitude[m][r];
        }
    }
    if (into.decay_length_counts.size() < part.decay_length_counts.size()) {
        into.decay_length_counts.resize(part.decay_length_counts.size(), 0);
    }
    for (std::size_t d = 0; d < part.decay_length_counts.size(); ++d) {
        into.decay_length_counts[d] += part.decay_length_counts[d];
    }
    into.chain_shapes.insert(into.chain_shapes.end(), part.chain_shapes.begin(),
                             part.chain_shapes.end());
}

} // namespace

SweepReport sweep(const SweepSpec& spec) {
    validate(spec);
    const std::uint64_t set_size = checked_pow(spec.cap, spec.width, spec.budget);
    if (set_size > spec.budget) {
        throw BudgetError("sweep: set size cap^width exceeds the classification budget");
    }

    int jobs = spec.jobs;
    if (jobs <= 0) {
        jobs = static_cast<int>(std::thread::hardware_concurrency());
    }
    jobs = std::max(1, std::min<int>(jobs, 64));
    const auto chunk_count =
        static_cast<std::uint64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), set_size ? set_size : 1));

    if (chunk_count <= 1) {
        return sweep_range(spec, 0, set_size);
    }

    std::vector<SweepReport> parts(chunk_count);
    std::vector<std::thread> workers;
    workers.reserve(chunk_count);
    for (std::uint64_t k = 0; k < chunk_count; ++k) {
        const std::uint64_t begin = set_size * k / chunk_count;
        const std::uint64_t end = set_size * (k + 1) / chunk_count;
        workers.emplace_back(
            [&spec, &parts, k, begin, end] { parts[k] = sweep_range(spec, begin, end); });
    }
    for (auto& worker : workers) {
        worker.join();
    }

    SweepReport report = make_empty_report(spec);
    for (auto& part : parts) {
        merge_into(report, std::move(part));
    }
    return report;
}

std::vector<MagnitudeProfileRow> divergence_profile(const SweepReport& report) {
    std::vector<MagnitudeProfileRow> rows;
    for (std::size_t m = 0; m < report.by_magnitude.size(); ++m) {
        const OutcomeTally& tally = report.by_magnitude[m];
        const std::uint64_t strings = tally.total();
        if (strings == 0) {
            continue;
        }
        MagnitudeProfileRow row;
        row.magnitude = static_cast<int>(m);
        row.strings = strings;
        row.divergent = Fraction(static_cast<std::int64_t>(tally.divergent),
                                 static_cast<std::int64_t>(strings));
        row.looping = Fraction(static_cast<std::int64_t>(tally.looping),
                               static_cast<std::int64_t>(strings));
        rows.push_back(row);
    }
    return rows;
}

std::uint64_t composition_count(int width, int magnitude) {
    if (width < 1 || magnitude < 0) {
        return 0;
    }
    if (magnitude > 9 * width) {
        return 0;
    }
    // counts[m] = number of length-k digit strings with digit sum m
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(magnitude) + 1, 0);
    counts[0] = 1;
    for (int k = 1; k <= width; ++k) {
        std::vector<std::uint64_t> next(counts.size(), 0);
        for (std::size_t m = 0; m < counts.size(); ++m) {
            if (counts[m] == 0) {
                continue;
            }
            for (int d = 0; d <= 9 && m + static_cast<std::size_t>(d) < next.size(); ++d) {
                next[m + static_cast<std::size_t>(d)] += counts[m];
            }
        }
        counts = std::move(next);
    }
    return counts[static_cast<std::size_t>(magnitude)];
}

namespace {

struct PhaseSums {
    std::uint64_t count = 0;
    std::int64_t delta_width = 0;
    std::int64_t delta_magnitude = 0;
    std::int64_t carry_pairs = 0;
};

// Enumerates every digit string of the given width and magnitude.
template <typename Fn>
void for_each_composition(int width, int magnitude, Fn&& fn) {
    std::vector<int> digits(static_cast<std::size_t>(width), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        const int slots_after = width - pos - 1;
        if (pos == width - 1) {
            if (remaining <= 9) {
                digits[static_cast<std::size_t>(pos)] = remaining;
                fn(digits);
            }
            return;
        }
        const int low = std::max(0, remaining - 9 * slots_after);
        const int high = std::min(9, remaining);
        for (int d = low; d <= high; ++d) {
            digits[static_cast<std::size_t>(pos)] = d;
            self(self, pos + 1, remaining - d);
        }
    };
    if (magnitude >= 0 && magnitude <= 9 * width) {
        rec(rec, 0, magnitude);
    }
}

} // namespace

std::vector<PhaseCell> phase_field(const PhaseRange& range) {
    if (range.width_min < 2 || range.width_min > range.width_max) {
        throw std::invalid_argument("phase_field: need 2 <= width_min <= width_max");
    }
    if (range.magnitude_min < 0 || range.magnitude_min > range.magnitude_max) {
        throw std::invalid_argument("phase_field: need 0 <= magnitude_min <= magnitude_max");
    }

    std::uint64_t workload = 0;
    for (int w = range.width_min; w <= range.width_max; ++w) {
        for (int m = range.magnitude_min; m <= std::min(range.magnitude_max, 9 * w); ++m) {
            workload += composition_count(w, m);
            if (workload > range.budget) {
                throw BudgetError("phase_field: composition count exceeds the budget");
            }
        }
    }

    std::vector<PhaseCell> cells;
    for (int w = range.width_min; w <= range.width_max; ++w) {
        for (int m = range.magnitude_min; m <= std::min(range.magnitude_max, 9 * w); ++m) {
            PhaseSums sums;
            for_each_composition(w, m, [&](const std::vector<int>& digits) {
                const auto st = step_stats(DigitString::from_digits(digits));
                ++sums.count;
                sums.delta_width += st.delta_width;
                sums.delta_magnitude += st.delta_magnitude;
                sums.carry_pairs += st.carry_pairs;
            });
            if (sums.count == 0) {
                continue;
            }
            PhaseCell cell;
            cell.width = w;
            cell.magnitude = m;
            cell.string_count = sums.count;
            const auto n = static_cast<std::int64_t>(sums.count);
            cell.mean_delta_width = Fraction(sums.delta_width, n);
            cell.mean_delta_magnitude = Fraction(sums.delta_magnitude, n);
            cell.mean_carry_pairs = Fraction(sums.carry_pairs, n);
            cells.push_back(cell);
        }
    }
    return cells;
}

Fraction critical_magnitude(int width) {
    if (width < 2) {
        throw std::invalid_argument("critical_magnitude: width must be at least 2");
    }
    if (width > 43) {
        throw std::invalid_argument("critical_magnitude: width too large for exact 64-bit arithmetic");
    }
    std::int64_t num = 18;
    std::int64_t den = 1;
    for (int i = 0; i < width - 4; ++i) {
        num *= 2;
        den *= 3;
    }
    for (int i = 0; i < 4 - width; ++i) {
        num *= 3;
        den *= 2;
    }
    return Fraction(num, den);
}

int min_magnitude_for_carries(int carries) {
    if (carries < 1) {
        throw std::invalid_argument("min_magnitude_for_carries: need at least one carry");
    }
    return 10 * ((carries + 1) / 2) + (1 - carries % 2);
}

std::vector<ResultByMagnitudeCell> result_by_magnitude(const SweepReport& report) {
    std::vector<ResultByMagnitudeCell> cells;
    for (std::size_t m = 0; m < report.result_by_magnitude.size(); ++m) {
        const std::uint64_t strings = report.by_magnitude[m].total();
        const std::uint64_t terminated = report.by_magnitude[m].terminated;
        if (terminated == 0) {
            continue;
        }
        for (std::size_t r = 0; r < 100; ++r) {
            const std::uint64_t count = report.result_by_magnitude[m][r];
            if (count == 0) {
                continue;
            }
            ResultByMagnitudeCell cell;
            cell.magnitude = static_cast<int>(m);
            cell.result = static_cast<int>(r);
            cell.count = count;
            cell.conditional = Fraction(static_cast<std::int64_t>(count),
                                        static_cast<std::int64_t>(terminated));
            cell.unconditional = Fraction(static_cast<std::int64_t>(count),
                                          static_cast<std::int64_t>(strings));
            cells.push_back(cell);
        }
    }
    return cells;
}

ChainShapeSummary chain_shape(const SweepReport& report) {
    ChainShapeSummary summary;
    summary.width = report.width;
    summary.terminating = report.chain_shapes.size();
    for (const ChainShapeRecord& rec : report.chain_shapes) {
        summary.max_width_reached = std::max<int>(summary.max_width_reached, rec.max_width);
        summary.max_decay_length = std::max(summary.max_decay_length, rec.decay_length);
        summary.max_increasing_steps =
            std::max<int>(summary.max_increasing_steps, rec.increasing_steps);
        if (rec.decay_length + 2 < static_cast<std::uint32_t>(report.width)) {
            summary.decay_at_least_width_minus_2 = false;
        }
        if (rec.decay_length > 0 && 2u * rec.increasing_steps >= rec.decay_length) {
            summary.increases_below_half_decay = false;
        }
    }
    return summary;
}

} // namespace loves

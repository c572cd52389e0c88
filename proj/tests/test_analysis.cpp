#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "loves/analysis.hpp"

using namespace loves;

namespace {

// Shared exhaustive w=5, c=10 sweep; computed once.
const SweepReport& five_by_ten() {
    static const SweepReport report = [] {
        SweepSpec spec;
        spec.width = 5;
        spec.cap = 10;
        spec.jobs = 1;
        return sweep(spec);
    }();
    return report;
}

template <typename Fn>
void for_each_string(int width, int cap, Fn&& fn) {
    std::vector<int> digits(static_cast<std::size_t>(width), 0);
    for (;;) {
        fn(digits);
        int pos = width - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == cap - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            return;
        }
        ++digits[static_cast<std::size_t>(pos)];
    }
}

} // namespace

TEST_CASE("critical magnitude is exact") {
    CHECK(critical_magnitude(4) == Fraction(18, 1));
    CHECK(critical_magnitude(5) == Fraction(12, 1));
    CHECK(critical_magnitude(6) == Fraction(8, 1));
    CHECK(critical_magnitude(3) == Fraction(27, 1));
    CHECK(critical_magnitude(2) == Fraction(81, 2));
    CHECK(critical_magnitude(7) == Fraction(16, 3));
    CHECK_THROWS_AS((void)critical_magnitude(1), std::invalid_argument);
}

TEST_CASE("minimum magnitude per carry count matches a brute-force minimizer") {
    CHECK(min_magnitude_for_carries(1) == 10);
    CHECK(min_magnitude_for_carries(2) == 11);
    CHECK(min_magnitude_for_carries(3) == 20);
    CHECK(min_magnitude_for_carries(4) == 21);
    CHECK_THROWS_AS((void)min_magnitude_for_carries(0), std::invalid_argument);

    // Oracle: minimize the digit sum over all strings with exactly that many
    // carrying pairs, for every width that can host them.
    std::array<int, 5> best{};
    best.fill(999);
    for (int w = 2; w <= 6; ++w) {
        for_each_string(w, 10, [&](const std::vector<int>& digits) {
            int carries = 0;
            int magnitude = 0;
            for (std::size_t i = 0; i < digits.size(); ++i) {
                magnitude += digits[i];
                if (i + 1 < digits.size() && digits[i] + digits[i + 1] >= 10) {
                    ++carries;
                }
            }
            if (carries >= 1 && carries <= 4) {
                best[static_cast<std::size_t>(carries)] =
                    std::min(best[static_cast<std::size_t>(carries)], magnitude);
            }
        });
    }
    for (int n = 1; n <= 4; ++n) {
        CHECK(best[static_cast<std::size_t>(n)] == min_magnitude_for_carries(n));
    }
}

TEST_CASE("composition counts") {
    CHECK(composition_count(5, 45) == 1);
    CHECK(composition_count(2, 0) == 1);
    CHECK(composition_count(5, 46) == 0);
    CHECK(composition_count(5, 9) == 715);
    for (int w = 2; w <= 4; ++w) {
        std::uint64_t total = 0;
        for (int m = 0; m <= 9 * w; ++m) {
            total += composition_count(w, m);
        }
        std::uint64_t expected = 1;
        for (int i = 0; i < w; ++i) {
            expected *= 10;
        }
        CHECK(total == expected);
    }
}

TEST_CASE("sweep of the singleton family") {
    SweepSpec spec;
    spec.width = 5;
    spec.cap = 1;
    const SweepReport report = sweep(spec);
    CHECK(report.set_size() == 1);
    CHECK(report.totals.terminated == 1);
    CHECK(report.result_counts[0] == 1);
    REQUIRE(report.decay_length_counts.size() == 4);
    CHECK(report.decay_length_counts[3] == 1);
}

TEST_CASE("sweep w=3, c=10: only the nine {9,9,x} strings fail to terminate") {
    SweepSpec spec;
    spec.width = 3;
    spec.cap = 10;
    const SweepReport report = sweep(spec);
    CHECK(report.set_size() == 1000);
    CHECK(report.totals.looping == 9);
    CHECK(report.totals.divergent == 0);
    CHECK(report.totals.undetermined == 0);
    CHECK(report.totals.terminated == 991);
    // per-magnitude populations equal the composition counts
    for (std::size_t m = 0; m < report.by_magnitude.size(); ++m) {
        CHECK(report.by_magnitude[m].total() == composition_count(3, static_cast<int>(m)));
    }
}

TEST_CASE("sweep refuses work beyond the budget") {
    SweepSpec spec;
    spec.width = 5;
    spec.cap = 10;
    spec.budget = 99;
    CHECK_THROWS_AS((void)sweep(spec), BudgetError);
}

TEST_CASE("sweep is identical for 1 and 3 workers") {
    SweepSpec spec;
    spec.width = 4;
    spec.cap = 10;
    spec.jobs = 1;
    const SweepReport a = sweep(spec);
    spec.jobs = 3;
    const SweepReport b = sweep(spec);
    CHECK(a.totals.terminated == b.totals.terminated);
    CHECK(a.totals.looping == b.totals.looping);
    CHECK(a.totals.divergent == b.totals.divergent);
    CHECK(a.result_counts == b.result_counts);
    CHECK(a.decay_length_counts == b.decay_length_counts);
    REQUIRE(a.chain_shapes.size() == b.chain_shapes.size());
    for (std::size_t i = 0; i < a.chain_shapes.size(); ++i) {
        CHECK(a.chain_shapes[i].decay_length == b.chain_shapes[i].decay_length);
        CHECK(a.chain_shapes[i].max_width == b.chain_shapes[i].max_width);
        CHECK(a.chain_shapes[i].increasing_steps == b.chain_shapes[i].increasing_steps);
    }
    for (std::size_t m = 0; m < a.by_magnitude.size(); ++m) {
        CHECK(a.by_magnitude[m].terminated == b.by_magnitude[m].terminated);
        CHECK(a.result_by_magnitude[m] == b.result_by_magnitude[m]);
    }
}

TEST_CASE("w=5 exhaustive sweep reproduces the headline counts") {
    const SweepReport& report = five_by_ten();
    CHECK(report.set_size() == 100000);
    CHECK(report.result_counts[99] == 97);
    std::uint64_t high = 0;
    for (int r = 95; r <= 99; ++r) {
        high += report.result_counts[static_cast<std::size_t>(r)];
    }
    CHECK(high == 731);
    // multiples of ten each come from exactly one string, {k,0,0,0,0}
    for (int k = 0; k <= 9; ++k) {
        CHECK(report.result_counts[static_cast<std::size_t>(10 * k)] == 1);
    }
    // no terminating strings above m = 27
    for (std::size_t m = 28; m < report.by_magnitude.size(); ++m) {
        CHECK(report.by_magnitude[m].terminated == 0);
    }
    CHECK(report.totals.undetermined == 0);
}

TEST_CASE("divergence profile for w=5") {
    const std::vector<MagnitudeProfileRow> rows = divergence_profile(five_by_ten());
    REQUIRE(rows.size() == 46);
    for (const MagnitudeProfileRow& row : rows) {
        CHECK(row.strings == composition_count(5, row.magnitude));
        if (row.magnitude <= 8) {
            CHECK(row.divergent == Fraction(0, 1));
        }
        if (row.magnitude >= 28) {
            CHECK(row.divergent == Fraction(1, 1));
            CHECK(row.looping == Fraction(0, 1));
        }
    }
    // divergence first appears at m=9 (14 of the 715 strings) and first
    // reaches probability 1/2 at m=16
    CHECK(rows[9].divergent == Fraction(14, 715));
    int crossing = -1;
    for (const MagnitudeProfileRow& row : rows) {
        if (crossing < 0 && row.divergent >= Fraction(1, 2)) {
            crossing = row.magnitude;
        }
    }
    CHECK(crossing == 16);
    // the zero string terminates, and {9,9,9,9,9} diverges
    CHECK(rows[0].divergent == Fraction(0, 1));
    CHECK(rows[45].divergent == Fraction(1, 1));
    CHECK(rows[45].strings == 1);
}

TEST_CASE("phase field cells are exact population means") {
    PhaseRange range;
    range.width_min = 5;
    range.width_max = 5;
    range.magnitude_min = 45;
    range.magnitude_max = 45;
    auto cells = phase_field(range);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].string_count == 1);
    CHECK(cells[0].mean_delta_width == Fraction(3, 1));
    CHECK(cells[0].mean_delta_magnitude == Fraction(-9, 1));
    CHECK(cells[0].mean_carry_pairs == Fraction(4, 1));

    range.width_min = range.width_max = 2;
    range.magnitude_min = range.magnitude_max = 0;
    cells = phase_field(range);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].mean_delta_width == Fraction(-1, 1));
    CHECK(cells[0].mean_delta_magnitude == Fraction(0, 1));
    CHECK(cells[0].mean_carry_pairs == Fraction(0, 1));
}

TEST_CASE("phase cell (5, 10) agrees with a direct-iterate oracle") {
    PhaseRange range;
    range.width_min = range.width_max = 5;
    range.magnitude_min = range.magnitude_max = 10;
    const auto cells = phase_field(range);
    REQUIRE(cells.size() == 1);

    // Oracle: filter the full 10^5 family and apply the game rule directly.
    std::int64_t count = 0, dw = 0, dm = 0;
    for_each_string(5, 10, [&](const std::vector<int>& digits) {
        const DigitString s = DigitString::from_digits(digits);
        if (s.magnitude() != 10) {
            return;
        }
        const DigitString next = iterate(s);
        ++count;
        dw += static_cast<std::int64_t>(next.width()) - 5;
        dm += next.magnitude() - 10;
    });
    CHECK(cells[0].string_count == static_cast<std::uint64_t>(count));
    CHECK(cells[0].mean_delta_width == Fraction(dw, count));
    CHECK(cells[0].mean_delta_magnitude == Fraction(dm, count));
}

TEST_CASE("phase field properties over a block of cells") {
    PhaseRange range;
    range.width_min = 2;
    range.width_max = 5;
    range.magnitude_min = 0;
    range.magnitude_max = 20;
    for (const PhaseCell& cell : phase_field(range)) {
        CHECK(cell.string_count == composition_count(cell.width, cell.magnitude));
        // cells whose whole population has no carries step width by exactly -1
        if (cell.mean_carry_pairs == Fraction(0, 1)) {
            CHECK(cell.mean_delta_width == Fraction(-1, 1));
        }
        // means times population are integers (sums were integer)
        const auto count = static_cast<std::int64_t>(cell.string_count);
        CHECK((cell.mean_delta_magnitude.num() * count) % cell.mean_delta_magnitude.den() == 0);
        CHECK((cell.mean_delta_width.num() * count) % cell.mean_delta_width.den() == 0);
    }
}

TEST_CASE("phase field respects the budget") {
    PhaseRange range;
    range.width_min = 2;
    range.width_max = 8;
    range.magnitude_min = 0;
    range.magnitude_max = 72;
    range.budget = 1000;
    CHECK_THROWS_AS((void)phase_field(range), BudgetError);
}

TEST_CASE("result by magnitude tables") {
    const auto cells = result_by_magnitude(five_by_ten());
    // m=0: the zero string gives result 0 with conditional probability 1
    bool found_zero = false;
    for (const auto& cell : cells) {
        if (cell.magnitude == 0) {
            CHECK(cell.result == 0);
            CHECK(cell.conditional == Fraction(1, 1));
            found_zero = true;
        }
    }
    CHECK(found_zero);

    // 99 is attainable from m=3 ({0,0,3,0,0}) and from m=24 ({9,1,9,3,2})
    auto has_result = [&](int m, int result) {
        for (const auto& cell : cells) {
            if (cell.magnitude == m && cell.result == result) {
                return cell.count > 0;
            }
        }
        return false;
    };
    CHECK(has_result(3, 99));
    CHECK(has_result(24, 99));

    // per-magnitude counts add up to the terminating totals, so the
    // conditional probabilities sum to 1 wherever anything terminates
    std::map<int, std::uint64_t> counts;
    for (const auto& cell : cells) {
        counts[cell.magnitude] += cell.count;
    }
    const SweepReport& report = five_by_ten();
    for (const auto& [m, total] : counts) {
        CHECK(total == report.by_magnitude[static_cast<std::size_t>(m)].terminated);
    }
}

TEST_CASE("chain shapes for w=4 and w=5") {
    SweepSpec spec;
    spec.width = 4;
    spec.cap = 10;
    const ChainShapeSummary four = chain_shape(sweep(spec));
    CHECK(four.max_width_reached == 7);
    CHECK(four.decay_at_least_width_minus_2);
    CHECK(four.increases_below_half_decay);

    const ChainShapeSummary five = chain_shape(five_by_ten());
    CHECK(five.max_width_reached <= 7);
    CHECK(five.max_decay_length == 35);
    CHECK(five.decay_at_least_width_minus_2);
    CHECK(five.increases_below_half_decay);
}

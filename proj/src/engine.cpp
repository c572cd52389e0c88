#include "loves/engine.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace loves {

DigitString iterate(const DigitString& s) {
    const std::string& in = s.digits_;
    if (in.size() < 2) {
        throw std::invalid_argument("iterate: string must have at least 2 digits");
    }
    DigitString out;
    out.digits_.reserve(in.size() * 2);
    for (std::size_t i = 0; i + 1 < in.size(); ++i) {
        const int sum = in[i] + in[i + 1];
        if (sum >= 10) {
            out.digits_.push_back(1);
            out.digits_.push_back(static_cast<char>(sum - 10));
        } else {
            out.digits_.push_back(static_cast<char>(sum));
        }
    }
    return out;
}

StepStats step_stats(const DigitString& s) {
    const std::size_t w = s.width();
    if (w < 2) {
        throw std::invalid_argument("step_stats: string must have at least 2 digits");
    }
    StepStats st;
    int inner_sum = 0;
    for (std::size_t i = 0; i + 1 < w; ++i) {
        if (s.digit(i) + s.digit(i + 1) >= 10) {
            ++st.carry_pairs;
        }
        if (i >= 1) {
            inner_sum += s.digit(i);
        }
    }
    const int width = static_cast<int>(w);
    st.predicted_width = width - 1 + st.carry_pairs;
    st.predicted_magnitude =
        s.digit(0) + s.digit(w - 1) + 2 * inner_sum - 9 * st.carry_pairs;
    st.delta_width = st.predicted_width - width;
    st.delta_magnitude = st.predicted_magnitude - s.magnitude();
    return st;
}

namespace {

Classification terminal_classification(const DigitString& final_string, int decay_length,
                                       ChainTrace trace) {
    Classification c;
    c.outcome.kind = OutcomeKind::Terminated;
    c.outcome.final_string = final_string;
    c.outcome.decay_length = decay_length;
    c.outcome.result = final_string.width() == 2
                           ? 10 * final_string.digit(0) + final_string.digit(1)
                           : final_string.digit(0);
    trace.decay_length = decay_length;
    c.trace = trace;
    return c;
}

} // namespace

Classification classify(const DigitString& s, const ClassifyLimits& limits) {
    const int start_width = static_cast<int>(s.width());
    if (start_width < 1) {
        throw std::invalid_argument("classify: string must have at least 1 digit");
    }

    ChainTrace trace;
    trace.max_width = start_width;
    trace.increasing_steps = 0;
    trace.visited_count = 1;

    // Length 1 and 2 strings are already final.
    if (start_width < 3) {
        return terminal_classification(s, 0, trace);
    }

    const int width_cap = limits.max_width > 0 ? limits.max_width : 2 * start_width + 8;

    std::unordered_map<DigitString, int> first_seen;
    std::vector<DigitString> history;
    first_seen.reserve(64);

    DigitString current = s;
    int step = 0;
    for (;;) {
        first_seen.emplace(current, step);
        history.push_back(current);

        DigitString next = iterate(current);
        ++step;

        const int next_width = static_cast<int>(next.width());
        trace.max_width = std::max(trace.max_width, next_width);
        if (next_width > static_cast<int>(current.width())) {
            ++trace.increasing_steps;
        }

        if (next_width < 3) {
            trace.visited_count = static_cast<int>(history.size()) + 1;
            return terminal_classification(next, step, trace);
        }

        if (auto it = first_seen.find(next); it != first_seen.end()) {
            Classification c;
            c.outcome.kind = OutcomeKind::Looping;
            c.outcome.preperiod = it->second;
            c.outcome.period = step - it->second;
            c.outcome.cycle_strings.assign(history.begin() + it->second, history.end());
            trace.visited_count = static_cast<int>(history.size());
            c.trace = trace;
            return c;
        }

        if (next_width > width_cap) {
            Classification c;
            c.outcome.kind = OutcomeKind::Divergent;
            c.outcome.iterations_to_detection = step;
            c.outcome.width_at_detection = next_width;
            trace.visited_count = static_cast<int>(history.size()) + 1;
            c.trace = trace;
            return c;
        }

        if (step >= limits.max_iterations) {
            throw UndeterminedError("classify: iteration limit reached without a verdict");
        }
        current = std::move(next);
    }
}

DigitString play(std::span<const int> counts) {
    if (counts.empty()) {
        throw std::invalid_argument("play: counts must be non-empty");
    }
    DigitString s;
    s.digits_.reserve(counts.size());
    for (int count : counts) {
        if (count < 0) {
            throw std::invalid_argument("play: counts must be non-negative");
        }
        if (count < 10) {
            s.digits_.push_back(static_cast<char>(count));
            continue;
        }
        std::string expansion;
        for (int v = count; v > 0; v /= 10) {
            expansion.push_back(static_cast<char>(v % 10));
        }
        s.digits_.append(expansion.rbegin(), expansion.rend());
    }
    return s;
}

} // namespace loves

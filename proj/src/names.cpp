#include "loves/names.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace loves {

Keyword Keyword::from_word(std::string_view word) {
    Keyword k;
    k.word_.reserve(word.size());
    for (char c : word) {
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("Keyword: letters only");
        }
        k.word_.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (k.word_.size() < 2) {
        throw std::invalid_argument("Keyword: need at least 2 letters");
    }
    return k;
}

std::string normalize_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

std::vector<int> letter_counts(std::string_view name_a, std::string_view name_b,
                               const Keyword& keyword) {
    const std::string combined = normalize_name(name_a) + normalize_name(name_b);
    std::array<int, 26> occurrences{};
    for (char c : combined) {
        ++occurrences[static_cast<std::size_t>(c - 'a')];
    }
    std::vector<int> counts;
    counts.reserve(keyword.width());
    for (char letter : keyword.word()) {
        counts.push_back(occurrences[static_cast<std::size_t>(letter - 'a')]);
    }
    return counts;
}

Classification play_names(std::string_view name_a, std::string_view name_b,
                          const Keyword& keyword, const ClassifyLimits& limits) {
    const std::vector<int> counts = letter_counts(name_a, name_b, keyword);
    return classify(play(counts), limits);
}

std::string_view to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Terminated: return "terminated";
        case VerdictKind::Looping: return "looping";
        case VerdictKind::Divergent: return "divergent";
        case VerdictKind::Undetermined: return "undetermined";
    }
    return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Roster Roster::parse_csv(std::string_view text) {
    Roster roster;
    std::size_t pos = 0;
    bool saw_header = false;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (!saw_header) {
            if (line != "name,gender,rank") {
                throw RosterError("roster: expected header name,gender,rank");
            }
            saw_header = true;
            continue;
        }
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string_view::npos ? std::string_view::npos
                                                            : line.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
            throw RosterError("roster: malformed row at line " + std::to_string(line_no));
        }
        NameRecord record;
        record.name = std::string(trim(line.substr(0, c1)));
        const std::string_view gender = trim(line.substr(c1 + 1, c2 - c1 - 1));
        const std::string_view rank = trim(line.substr(c2 + 1));
        if (normalize_name(record.name).empty()) {
            throw RosterError("roster: empty name at line " + std::to_string(line_no));
        }
        if (gender == "boy") {
            record.gender = Gender::Boy;
        } else if (gender == "girl") {
            record.gender = Gender::Girl;
        } else {
            throw RosterError("roster: gender must be boy or girl at line " +
                              std::to_string(line_no));
        }
        try {
            std::size_t used = 0;
            record.rank = std::stoi(std::string(rank), &used);
            if (used != rank.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw RosterError("roster: bad rank at line " + std::to_string(line_no));
        }
        if (record.rank < 1) {
            throw RosterError("roster: rank must be positive at line " + std::to_string(line_no));
        }
        roster.entries.push_back(std::move(record));
    }
    if (!saw_header) {
        throw RosterError("roster: file is empty");
    }
    return roster;
}

Roster Roster::load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw RosterError("roster: cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

PairingReport roster_pairings(const Roster& roster, const Keyword& keyword,
                              const ClassifyLimits& limits) {
    PairingReport report;
    report.letter_count_hist.resize(keyword.width());
    for (std::size_t i = 0; i < roster.entries.size(); ++i) {
        for (std::size_t j = i + 1; j < roster.entries.size(); ++j) {
            const NameRecord& a = roster.entries[i];
            const NameRecord& b = roster.entries[j];
            const std::vector<int> counts = letter_counts(a.name, b.name, keyword);
            const DigitString start = play(counts);

            PairingRow row;
            row.name_a = a.name;
            row.name_b = b.name;
            row.magnitude = start.magnitude();
            try {
                const Classification c = classify(start, limits);
                switch (c.outcome.kind) {
                    case OutcomeKind::Terminated:
                        row.kind = VerdictKind::Terminated;
                        row.result = c.outcome.result;
                        ++report.terminated;
                        ++report.result_counts[static_cast<std::size_t>(c.outcome.result)];
                        break;
                    case OutcomeKind::Looping:
                        row.kind = VerdictKind::Looping;
                        ++report.looping;
                        break;
                    case OutcomeKind::Divergent:
                        row.kind = VerdictKind::Divergent;
                        ++report.divergent;
                        break;
                }
            } catch (const UndeterminedError&) {
                row.kind = VerdictKind::Undetermined;
                ++report.undetermined;
            }
            ++report.pair_count;
            ++report.magnitude_counts[row.magnitude];
            for (std::size_t k = 0; k < counts.size(); ++k) {
                ++report.letter_count_hist[k][counts[k]];
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::string ScoreCard::set_label() const {
    std::string label;
    label.reserve(counts.size());
    for (int c : counts) {
        if (c < 10) {
            label.push_back(static_cast<char>('0' + c));
        } else {
            label += std::to_string(c);
        }
    }
    return label;
}

ScoreCard score_individual(const std::vector<int>& counts, const Roster& roster,
                           const Keyword& keyword, const ClassifyLimits& limits) {
    if (counts.size() != keyword.width()) {
        throw std::invalid_argument("score_individual: counts length must match keyword length");
    }
    ScoreCard card;
    card.counts = counts;
    for (int c : counts) {
        card.magnitude += c;
    }

    std::int64_t result_sum = 0;
    std::vector<int> combined(counts.size(), 0);
    for (const NameRecord& partner : roster.entries) {
        const std::vector<int> partner_counts = letter_counts(partner.name, "", keyword);
        for (std::size_t k = 0; k < counts.size(); ++k) {
            combined[k] = counts[k] + partner_counts[k];
        }
        bool terminated = false;
        int result = -1;
        try {
            const Classification c = classify(play(combined), limits);
            if (c.outcome.kind == OutcomeKind::Terminated) {
                terminated = true;
                result = c.outcome.result;
            }
        } catch (const UndeterminedError&) {
        }
        if (terminated) {
            ++card.terminating_partners;
            result_sum += result;
            if (result >= 95) {
                ++card.high_partners;
            }
        } else {
            ++card.nonterminating_partners;
        }
    }
    if (card.terminating_partners > 0) {
        card.average = Fraction(result_sum, card.terminating_partners);
    }
    return card;
}

SetRanking rank_sets(int cap, const Roster& roster, const Keyword& keyword,
                     const ClassifyLimits& limits, std::uint64_t budget) {
    if (cap < 1 || cap > 10) {
        throw std::invalid_argument("rank_sets: cap must lie in [1, 10]");
    }
    std::uint64_t set_count = 1;
    for (std::size_t i = 0; i < keyword.width(); ++i) {
        set_count *= static_cast<std::uint64_t>(cap);
        if (set_count > budget) {
            throw BudgetError("rank_sets: cap^width exceeds the budget");
        }
    }

    std::vector<ScoreCard> cards;
    cards.reserve(set_count);
    std::vector<int> counts(keyword.width(), 0);
    for (std::uint64_t i = 0; i < set_count; ++i) {
        cards.push_back(score_individual(counts, roster, keyword, limits));
        int pos = static_cast<int>(counts.size()) - 1;
        while (pos >= 0 && counts[static_cast<std::size_t>(pos)] == cap - 1) {
            counts[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos >= 0) {
            ++counts[static_cast<std::size_t>(pos)];
        }
    }

    SetRanking ranking;
    ranking.by_average = cards;
    std::stable_sort(ranking.by_average.begin(), ranking.by_average.end(),
                     [](const ScoreCard& a, const ScoreCard& b) {
                         if (a.average != b.average) {
                             return b.average < a.average;
                         }
                         return a.counts < b.counts;
                     });
    ranking.by_high_partners = std::move(cards);
    std::stable_sort(ranking.by_high_partners.begin(), ranking.by_high_partners.end(),
                     [](const ScoreCard& a, const ScoreCard& b) {
                         if (a.high_partners != b.high_partners) {
                             return a.high_partners > b.high_partners;
                         }
                         return a.counts < b.counts;
                     });
    return ranking;
}

std::vector<std::pair<int, Fraction>> score_vs_magnitude(const std::vector<ScoreCard>& cards) {
    if (cards.empty()) {
        throw std::invalid_argument("score_vs_magnitude: no cards");
    }
    std::vector<std::pair<int, Fraction>> points;
    points.reserve(cards.size());
    for (const ScoreCard& card : cards) {
        points.emplace_back(card.magnitude, card.average);
    }
    return points;
}

} // namespace loves

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "loves/analysis.hpp"
#include "loves/engine.hpp"
#include "loves/fraction.hpp"

namespace loves {

// The central word of the game. Letters are normalized to lowercase;
// repeated letters are allowed and simply produce equal counts at their
// positions.
class Keyword {
public:
    static Keyword from_word(std::string_view word);

    const std::string& word() const { return word_; }
    std::size_t width() const { return word_.size(); }

private:
    std::string word_;
};

enum class Gender { Boy, Girl };

struct NameRecord {
    std::string name;
    Gender gender = Gender::Boy;
    int rank = 0;
};

class RosterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Roster {
    std::vector<NameRecord> entries;

    // Reads a UTF-8 CSV with header name,gender,rank.
    static Roster load_csv(const std::string& path);
    static Roster parse_csv(std::string_view text);
};

// Lowercases and strips everything outside a-z.
std::string normalize_name(std::string_view name);

// Occurrence counts of each keyword letter in the concatenation of both
// names, case-insensitively, ignoring non-alphabetic characters.
std::vector<int> letter_counts(std::string_view name_a, std::string_view name_b,
                               const Keyword& keyword);

Classification play_names(std::string_view name_a, std::string_view name_b,
                          const Keyword& keyword, const ClassifyLimits& limits = {});

enum class VerdictKind { Terminated, Looping, Divergent, Undetermined };

std::string_view to_string(VerdictKind kind);

struct PairingRow {
    std::string name_a;
    std::string name_b;
    VerdictKind kind = VerdictKind::Terminated;
    int result = -1;  // only for terminated pairs
    int magnitude = 0;
};

struct PairingReport {
    std::uint64_t pair_count = 0;
    std::uint64_t terminated = 0;
    std::uint64_t looping = 0;
    std::uint64_t divergent = 0;
    std::uint64_t undetermined = 0;
    std::array<std::uint64_t, 100> result_counts{};
    std::map<int, std::uint64_t> magnitude_counts;
    // Per keyword position: distribution of letter counts across pairings.
    std::vector<std::map<int, std::uint64_t>> letter_count_hist;
    std::vector<PairingRow> rows;
};

// Classifies every unordered pair of distinct roster entries.
PairingReport roster_pairings(const Roster& roster, const Keyword& keyword,
                              const ClassifyLimits& limits = {});

struct ScoreCard {
    std::vector<int> counts;  // the subject's letter-count set
    int magnitude = 0;
    Fraction average;  // over terminating partners
    int terminating_partners = 0;
    int nonterminating_partners = 0;
    int high_partners = 0;  // partners scoring >= 95

    std::string set_label() const;
};

// Scores one letter-count set against every roster member: the combined
// string is the componentwise sum of subject and partner counts.
ScoreCard score_individual(const std::vector<int>& counts, const Roster& roster,
                           const Keyword& keyword, const ClassifyLimits& limits = {});

struct SetRanking {
    std::vector<ScoreCard> by_average;        // descending, ties by set label
    std::vector<ScoreCard> by_high_partners;  // descending, ties by set label
};

// Scores every counts-set with all digits below cap.
SetRanking rank_sets(int cap, const Roster& roster, const Keyword& keyword,
                     const ClassifyLimits& limits = {}, std::uint64_t budget = kDefaultBudget);

std::vector<std::pair<int, Fraction>> score_vs_magnitude(const std::vector<ScoreCard>& cards);

} // namespace loves

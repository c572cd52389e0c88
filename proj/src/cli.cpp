#include "loves/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "loves/analysis.hpp"
#include "loves/backtrack.hpp"
#include "loves/engine.hpp"
#include "loves/names.hpp"

namespace loves {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;
constexpr const char* kDefaultRoster = "data/uk_names_2010.csv";

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

json fraction_json(const Fraction& f) {
    return json{{"num", f.num()}, {"den", f.den()}, {"value", f.value()}};
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') {
            quoted += "\"\"";
        } else {
            quoted += c;
        }
    }
    quoted += '"';
    return quoted;
}

// Every emitted file carries the parameters needed to reproduce it: a JSON
// envelope, or `# key=value` comment lines ahead of the CSV header.
void emit(std::ostream& out, const std::string& command, const json& params, const json& data,
          bool csv, const std::string& csv_body) {
    if (csv) {
        out << "# command=" << command << "\n";
        out << "# format_version=" << kFormatVersion << "\n";
        for (const auto& [key, value] : params.items()) {
            out << "# " << key << "=";
            if (value.is_string()) {
                out << value.get<std::string>();
            } else {
                out << value.dump();
            }
            out << "\n";
        }
        out << csv_body;
        return;
    }
    json envelope;
    envelope["command"] = command;
    envelope["format_version"] = kFormatVersion;
    envelope["parameters"] = params;
    envelope["data"] = data;
    out << envelope.dump(2) << "\n";
}

std::uint64_t budget_from_env() {
    const char* env = std::getenv("LOVES_BUDGET");
    if (env == nullptr || *env == '\0') {
        return kDefaultBudget;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || value == 0) {
        throw std::invalid_argument("LOVES_BUDGET must be a positive integer");
    }
    return static_cast<std::uint64_t>(value);
}

json outcome_json(const Classification& c) {
    json data;
    switch (c.outcome.kind) {
        case OutcomeKind::Terminated:
            data["kind"] = "terminated";
            data["result"] = c.outcome.result;
            data["decay_length"] = c.outcome.decay_length;
            data["final"] = c.outcome.final_string.to_string();
            break;
        case OutcomeKind::Looping: {
            data["kind"] = "looping";
            data["preperiod"] = c.outcome.preperiod;
            data["period"] = c.outcome.period;
            json cycle = json::array();
            for (const DigitString& s : c.outcome.cycle_strings) {
                cycle.push_back(s.to_string());
            }
            data["cycle"] = cycle;
            break;
        }
        case OutcomeKind::Divergent:
            data["kind"] = "divergent";
            data["iterations_to_detection"] = c.outcome.iterations_to_detection;
            data["width_at_detection"] = c.outcome.width_at_detection;
            break;
    }
    return data;
}

json trace_json(const ChainTrace& trace) {
    json t;
    if (trace.decay_length.has_value()) {
        t["decay_length"] = *trace.decay_length;
    } else {
        t["decay_length"] = nullptr;
    }
    t["max_width"] = trace.max_width;
    t["increasing_steps"] = trace.increasing_steps;
    t["visited_count"] = trace.visited_count;
    return t;
}

struct GameArgs {
    std::string digit_text;
    std::vector<std::string> names;
    std::string keyword = "LOVES";
    int max_width = 0;
    int max_iterations = 10000;
};

void add_game_options(CLI::App* cmd, GameArgs& args) {
    auto* string_opt = cmd->add_option("--string", args.digit_text, "Starting digit string, e.g. 11010");
    auto* names_opt =
        cmd->add_option("--names", args.names, "Two player names")->expected(2);
    string_opt->excludes(names_opt);
    cmd->add_option("--keyword", args.keyword, "Game word (default LOVES)");
    cmd->add_option("--max-width", args.max_width, "Divergence width bound (0 = 2*w0+8)");
    cmd->add_option("--max-iters", args.max_iterations, "Iteration cap before undetermined");
}

DigitString game_start(const GameArgs& args, json& params) {
    params["max_width"] = args.max_width;
    params["max_iterations"] = args.max_iterations;
    if (!args.digit_text.empty()) {
        params["string"] = args.digit_text;
        return DigitString::parse(args.digit_text);
    }
    if (args.names.size() == 2) {
        params["names"] = args.names;
        params["keyword"] = args.keyword;
        const Keyword kw = Keyword::from_word(args.keyword);
        return play(letter_counts(args.names[0], args.names[1], kw));
    }
    throw CLI::ValidationError("provide either --string or --names A B");
}

ClassifyLimits game_limits(const GameArgs& args) {
    ClassifyLimits limits;
    limits.max_width = args.max_width;
    limits.max_iterations = args.max_iterations;
    return limits;
}

json start_json(const DigitString& s) {
    json data;
    data["start"] = s.to_string();
    data["width"] = s.width();
    data["magnitude"] = s.magnitude();
    return data;
}

// --- sweep-backed commands ----------------------------------------------

struct SweepArgs {
    int width = 5;
    int cap = 10;
    int jobs = 0;
    int max_width = 0;
    int max_iterations = 10000;
};

void add_sweep_options(CLI::App* cmd, SweepArgs& args) {
    cmd->add_option("--w", args.width, "String length")->required();
    cmd->add_option("--cap", args.cap, "Digit cap c: digits drawn from [0, c-1]")->required();
    cmd->add_option("--jobs", args.jobs, "Worker count (0 = hardware)");
    cmd->add_option("--max-width", args.max_width, "Divergence width bound (0 = 2*w0+8)");
    cmd->add_option("--max-iters", args.max_iterations, "Iteration cap before undetermined");
}

SweepSpec sweep_spec(const SweepArgs& args, json& params) {
    SweepSpec spec;
    spec.width = args.width;
    spec.cap = args.cap;
    spec.jobs = args.jobs;
    spec.limits.max_width = args.max_width;
    spec.limits.max_iterations = args.max_iterations;
    spec.budget = budget_from_env();
    params["w"] = args.width;
    params["cap"] = args.cap;
    params["jobs"] = args.jobs;
    params["max_width"] = args.max_width;
    params["max_iterations"] = args.max_iterations;
    params["budget"] = spec.budget;
    return spec;
}

json tally_json(const OutcomeTally& tally) {
    return json{{"terminated", tally.terminated},
                {"looping", tally.looping},
                {"divergent", tally.divergent},
                {"undetermined", tally.undetermined}};
}

json sweep_json(const SweepReport& report) {
    json data;
    data["set_size"] = report.set_size();
    data["totals"] = tally_json(report.totals);

    json results = json::array();
    for (std::size_t r = 0; r < report.result_counts.size(); ++r) {
        results.push_back(report.result_counts[r]);
    }
    data["result_counts"] = results;

    json by_m = json::array();
    for (std::size_t m = 0; m < report.by_magnitude.size(); ++m) {
        if (report.by_magnitude[m].total() == 0) {
            continue;
        }
        json row = tally_json(report.by_magnitude[m]);
        row["m"] = m;
        by_m.push_back(row);
    }
    data["by_magnitude"] = by_m;

    json profile = json::array();
    for (const MagnitudeProfileRow& row : divergence_profile(report)) {
        profile.push_back(json{{"m", row.magnitude},
                               {"strings", row.strings},
                               {"divergent", fraction_json(row.divergent)},
                               {"looping", fraction_json(row.looping)}});
    }
    data["profile"] = profile;

    json decays = json::array();
    for (std::size_t d = 0; d < report.decay_length_counts.size(); ++d) {
        if (report.decay_length_counts[d] == 0) {
            continue;
        }
        decays.push_back(json{{"d", d}, {"count", report.decay_length_counts[d]}});
    }
    data["decay_lengths"] = decays;
    return data;
}

std::string sweep_csv(const SweepReport& report, const std::string& table) {
    std::string body;
    if (table == "results") {
        body = "result,count\n";
        for (std::size_t r = 0; r < report.result_counts.size(); ++r) {
            body += std::to_string(r) + "," + std::to_string(report.result_counts[r]) + "\n";
        }
    } else if (table == "magnitude") {
        body = "m,terminated,looping,divergent,undetermined\n";
        for (std::size_t m = 0; m < report.by_magnitude.size(); ++m) {
            const OutcomeTally& tally = report.by_magnitude[m];
            if (tally.total() == 0) {
                continue;
            }
            body += std::to_string(m) + "," + std::to_string(tally.terminated) + "," +
                    std::to_string(tally.looping) + "," + std::to_string(tally.divergent) + "," +
                    std::to_string(tally.undetermined) + "\n";
        }
    } else if (table == "profile") {
        body = "m,divergent_num,divergent_den,divergent,looping_num,looping_den,looping\n";
        for (const MagnitudeProfileRow& row : divergence_profile(report)) {
            body += std::to_string(row.magnitude) + "," + std::to_string(row.divergent.num()) +
                    "," + std::to_string(row.divergent.den()) + "," +
                    fmt_double(row.divergent.value()) + "," + std::to_string(row.looping.num()) +
                    "," + std::to_string(row.looping.den()) + "," +
                    fmt_double(row.looping.value()) + "\n";
        }
    } else if (table == "results-by-magnitude") {
        body = "m,result,count,cond_num,cond_den,cond,uncond_num,uncond_den,uncond\n";
        for (const ResultByMagnitudeCell& cell : result_by_magnitude(report)) {
            body += std::to_string(cell.magnitude) + "," + std::to_string(cell.result) + "," +
                    std::to_string(cell.count) + "," + std::to_string(cell.conditional.num()) +
                    "," + std::to_string(cell.conditional.den()) + "," +
                    fmt_double(cell.conditional.value()) + "," +
                    std::to_string(cell.unconditional.num()) + "," +
                    std::to_string(cell.unconditional.den()) + "," +
                    fmt_double(cell.unconditional.value()) + "\n";
        }
    } else {
        throw CLI::ValidationError("unknown --table " + table);
    }
    return body;
}

int run_play(const GameArgs& args, bool detailed, std::ostream& out, bool csv) {
    json params;
    const DigitString start = game_start(args, params);
    const Classification c = classify(start, game_limits(args));
    json data = start_json(start);
    data.update(outcome_json(c));
    if (detailed) {
        data["trace"] = trace_json(c.trace);
    }
    const std::string command = detailed ? "classify" : "play";
    std::string body;
    if (csv) {
        body = "kind,result,decay_length,start,final\n";
        const bool term = c.outcome.kind == OutcomeKind::Terminated;
        body += std::string(data["kind"].get<std::string>()) + ",";
        body += (term ? std::to_string(c.outcome.result) : std::string()) + ",";
        body += (term ? std::to_string(c.outcome.decay_length) : std::string()) + ",";
        body += start.to_string() + ",";
        body += (term ? c.outcome.final_string.to_string() : std::string()) + "\n";
    }
    emit(out, command, params, data, csv, body);
    return 0;
}

// --- main dispatch --------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"LOVES iterated digit-string game toolkit"};
    app.require_subcommand(1);
    bool csv = false;

    GameArgs play_args;
    auto* play_cmd = app.add_subcommand("play", "Play one game and report the outcome");
    add_game_options(play_cmd, play_args);

    GameArgs classify_args;
    auto* classify_cmd =
        app.add_subcommand("classify", "Play one game and report outcome plus chain trace");
    add_game_options(classify_cmd, classify_args);

    SweepArgs sweep_args;
    std::string sweep_table = "results";
    auto* sweep_cmd = app.add_subcommand("sweep", "Classify every string in a (w, cap) family");
    add_sweep_options(sweep_cmd, sweep_args);
    sweep_cmd->add_option("--table", sweep_table,
                          "CSV table: results, magnitude, profile, results-by-magnitude");

    SweepArgs decay_args;
    bool decay_shape = false;
    auto* decay_cmd =
        app.add_subcommand("decay-stats", "Decay-length and chain-shape statistics of a family");
    add_sweep_options(decay_cmd, decay_args);
    decay_cmd->add_flag("--shape", decay_shape, "Emit per-chain shape records instead of the histogram");

    PhaseRange phase_range;
    auto* phase_cmd =
        app.add_subcommand("phase", "Mean one-step movement per (w, m) cell, exact over all strings");
    phase_cmd->add_option("--w-min", phase_range.width_min, "Smallest width");
    phase_cmd->add_option("--w-max", phase_range.width_max, "Largest width");
    phase_cmd->add_option("--m-min", phase_range.magnitude_min, "Smallest magnitude");
    phase_cmd->add_option("--m-max", phase_range.magnitude_max, "Largest magnitude");

    std::string pairings_roster = kDefaultRoster;
    std::string pairings_keyword = "LOVES";
    GameArgs pairings_limits;
    auto* pairings_cmd =
        app.add_subcommand("names-pairings", "Classify every pair of roster names");
    pairings_cmd->add_option("--roster", pairings_roster, "Roster CSV (name,gender,rank)");
    pairings_cmd->add_option("--keyword", pairings_keyword, "Game word");
    pairings_cmd->add_option("--max-width", pairings_limits.max_width, "Divergence width bound");
    pairings_cmd->add_option("--max-iters", pairings_limits.max_iterations, "Iteration cap");

    std::string scores_roster = kDefaultRoster;
    std::string scores_keyword = "LOVES";
    std::string scores_set;
    int scores_cap = 3;
    GameArgs scores_limits;
    auto* scores_cmd =
        app.add_subcommand("score-sets", "Score letter-count sets against every roster name");
    scores_cmd->add_option("--roster", scores_roster, "Roster CSV (name,gender,rank)");
    scores_cmd->add_option("--keyword", scores_keyword, "Game word");
    scores_cmd->add_option("--cap", scores_cap, "Digit cap for the enumerated sets");
    scores_cmd->add_option("--set", scores_set, "Score a single set, e.g. 02000");
    scores_cmd->add_option("--max-width", scores_limits.max_width, "Divergence width bound");
    scores_cmd->add_option("--max-iters", scores_limits.max_iterations, "Iteration cap");

    int backtrack_target = -1;
    auto* backtrack_cmd = app.add_subcommand(
        "backtrack", "Width-5 starting strings reaching a result through never-growing chains");
    backtrack_cmd->add_option("--target", backtrack_target, "Final result in [0, 99]")->required();

    for (CLI::App* sub : {play_cmd, classify_cmd, sweep_cmd, decay_cmd, phase_cmd, pairings_cmd,
                          scores_cmd, backtrack_cmd}) {
        sub->add_flag("--csv", csv, "Emit CSV instead of JSON");
    }

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("loves");
        for (const std::string& a : args) {
            argv.push_back(a.c_str());
        }
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (play_cmd->parsed()) {
        return run_play(play_args, false, out, csv);
    }
    if (classify_cmd->parsed()) {
        return run_play(classify_args, true, out, csv);
    }

    if (sweep_cmd->parsed()) {
        json params;
        const SweepReport report = sweep(sweep_spec(sweep_args, params));
        if (csv) {
            params["table"] = sweep_table;
        }
        emit(out, "sweep", params, csv ? json() : sweep_json(report), csv,
             csv ? sweep_csv(report, sweep_table) : std::string());
        return 0;
    }

    if (decay_cmd->parsed()) {
        json params;
        const SweepReport report = sweep(sweep_spec(decay_args, params));
        params["shape"] = decay_shape;
        const ChainShapeSummary summary = chain_shape(report);
        json data;
        std::string body;
        if (decay_shape) {
            body = "d,max_width,increasing_steps\n";
            for (const ChainShapeRecord& rec : report.chain_shapes) {
                body += std::to_string(rec.decay_length) + "," + std::to_string(rec.max_width) +
                        "," + std::to_string(rec.increasing_steps) + "\n";
            }
        } else {
            body = "d,count\n";
            for (std::size_t d = 0; d < report.decay_length_counts.size(); ++d) {
                if (report.decay_length_counts[d] == 0) {
                    continue;
                }
                body += std::to_string(d) + "," + std::to_string(report.decay_length_counts[d]) +
                        "\n";
            }
        }
        if (!csv) {
            json hist = json::array();
            for (std::size_t d = 0; d < report.decay_length_counts.size(); ++d) {
                if (report.decay_length_counts[d] == 0) {
                    continue;
                }
                hist.push_back(json{{"d", d}, {"count", report.decay_length_counts[d]}});
            }
            data["histogram"] = hist;
            data["summary"] = json{{"w", summary.width},
                                   {"terminating", summary.terminating},
                                   {"max_width_reached", summary.max_width_reached},
                                   {"max_decay_length", summary.max_decay_length},
                                   {"max_increasing_steps", summary.max_increasing_steps}};
            if (decay_shape) {
                json records = json::array();
                for (const ChainShapeRecord& rec : report.chain_shapes) {
                    records.push_back(json{{"d", rec.decay_length},
                                           {"max_width", rec.max_width},
                                           {"increasing_steps", rec.increasing_steps}});
                }
                data["records"] = records;
            }
        }
        emit(out, "decay-stats", params, data, csv, body);
        return 0;
    }

    if (phase_cmd->parsed()) {
        phase_range.budget = budget_from_env();
        json params;
        params["w_min"] = phase_range.width_min;
        params["w_max"] = phase_range.width_max;
        params["m_min"] = phase_range.magnitude_min;
        params["m_max"] = phase_range.magnitude_max;
        params["budget"] = phase_range.budget;
        const std::vector<PhaseCell> cells = phase_field(phase_range);
        json data;
        std::string body;
        if (csv) {
            body = "w,m,count,mean_dw,mean_dm,mean_n\n";
            for (const PhaseCell& cell : cells) {
                body += std::to_string(cell.width) + "," + std::to_string(cell.magnitude) + "," +
                        std::to_string(cell.string_count) + "," +
                        fmt_double(cell.mean_delta_width.value()) + "," +
                        fmt_double(cell.mean_delta_magnitude.value()) + "," +
                        fmt_double(cell.mean_carry_pairs.value()) + "\n";
            }
        } else {
            json cell_rows = json::array();
            for (const PhaseCell& cell : cells) {
                cell_rows.push_back(json{{"w", cell.width},
                                         {"m", cell.magnitude},
                                         {"count", cell.string_count},
                                         {"mean_dw", fraction_json(cell.mean_delta_width)},
                                         {"mean_dm", fraction_json(cell.mean_delta_magnitude)},
                                         {"mean_n", fraction_json(cell.mean_carry_pairs)}});
            }
            data["cells"] = cell_rows;
            json critical = json::array();
            for (int w = phase_range.width_min; w <= phase_range.width_max; ++w) {
                critical.push_back(json{{"w", w}, {"m_star", fraction_json(critical_magnitude(w))}});
            }
            data["critical_line"] = critical;
        }
        emit(out, "phase", params, data, csv, body);
        return 0;
    }

    if (pairings_cmd->parsed()) {
        json params;
        params["roster"] = pairings_roster;
        params["keyword"] = pairings_keyword;
        params["max_width"] = pairings_limits.max_width;
        params["max_iterations"] = pairings_limits.max_iterations;
        const Roster roster = Roster::load_csv(pairings_roster);
        const Keyword keyword = Keyword::from_word(pairings_keyword);
        ClassifyLimits limits;
        limits.max_width = pairings_limits.max_width;
        limits.max_iterations = pairings_limits.max_iterations;
        const PairingReport report = roster_pairings(roster, keyword, limits);
        std::string body;
        json data;
        if (csv) {
            body = "name_a,name_b,kind,result\n";
            for (const PairingRow& row : report.rows) {
                body += csv_field(row.name_a) + "," + csv_field(row.name_b) + "," +
                        std::string(to_string(row.kind)) + "," +
                        (row.kind == VerdictKind::Terminated ? std::to_string(row.result)
                                                             : std::string()) +
                        "\n";
            }
        } else {
            data["pair_count"] = report.pair_count;
            data["totals"] = json{{"terminated", report.terminated},
                                  {"looping", report.looping},
                                  {"divergent", report.divergent},
                                  {"undetermined", report.undetermined}};
            json results = json::array();
            for (std::size_t r = 0; r < report.result_counts.size(); ++r) {
                results.push_back(report.result_counts[r]);
            }
            data["result_counts"] = results;
            json magnitudes = json::array();
            for (const auto& [m, count] : report.magnitude_counts) {
                magnitudes.push_back(json{{"m", m}, {"count", count}});
            }
            data["magnitude_counts"] = magnitudes;
            json letters = json::array();
            for (std::size_t k = 0; k < report.letter_count_hist.size(); ++k) {
                json hist = json::array();
                for (const auto& [count, pairs] : report.letter_count_hist[k]) {
                    hist.push_back(json{{"count", count}, {"pairs", pairs}});
                }
                letters.push_back(json{{"letter", std::string(1, keyword.word()[k])},
                                       {"distribution", hist}});
            }
            data["letter_counts"] = letters;
            json rows = json::array();
            for (const PairingRow& row : report.rows) {
                json r{{"name_a", row.name_a},
                       {"name_b", row.name_b},
                       {"kind", std::string(to_string(row.kind))},
                       {"m", row.magnitude}};
                if (row.kind == VerdictKind::Terminated) {
                    r["result"] = row.result;
                }
                rows.push_back(r);
            }
            data["pairs"] = rows;
        }
        emit(out, "names-pairings", params, data, csv, body);
        return 0;
    }

    if (scores_cmd->parsed()) {
        json params;
        params["roster"] = scores_roster;
        params["keyword"] = scores_keyword;
        params["max_width"] = scores_limits.max_width;
        params["max_iterations"] = scores_limits.max_iterations;
        const Roster roster = Roster::load_csv(scores_roster);
        const Keyword keyword = Keyword::from_word(scores_keyword);
        ClassifyLimits limits;
        limits.max_width = scores_limits.max_width;
        limits.max_iterations = scores_limits.max_iterations;

        auto card_csv_row = [](const ScoreCard& card) {
            return card.set_label() + "," + std::to_string(card.magnitude) + "," +
                   std::to_string(card.average.num()) + "," + std::to_string(card.average.den()) +
                   "," + fmt_fixed2(card.average.value()) + "," +
                   std::to_string(card.high_partners) + "\n";
        };
        auto card_json = [](const ScoreCard& card) {
            return json{{"set", card.set_label()},
                        {"m", card.magnitude},
                        {"average", fraction_json(card.average)},
                        {"terminating_partners", card.terminating_partners},
                        {"nonterminating_partners", card.nonterminating_partners},
                        {"high_partners", card.high_partners}};
        };

        std::string body = "set,m,avg_num,avg_den,avg,high_partners\n";
        json data;
        if (!scores_set.empty()) {
            params["set"] = scores_set;
            std::vector<int> counts;
            for (char c : scores_set) {
                if (c < '0' || c > '9') {
                    throw std::invalid_argument("score-sets: --set expects digits 0-9");
                }
                counts.push_back(c - '0');
            }
            const ScoreCard card = score_individual(counts, roster, keyword, limits);
            body += card_csv_row(card);
            data["card"] = card_json(card);
        } else {
            params["cap"] = scores_cap;
            params["budget"] = budget_from_env();
            const SetRanking ranking =
                rank_sets(scores_cap, roster, keyword, limits, budget_from_env());
            json by_avg = json::array();
            for (const ScoreCard& card : ranking.by_average) {
                body += card_csv_row(card);
                by_avg.push_back(card_json(card));
            }
            json by_high = json::array();
            for (const ScoreCard& card : ranking.by_high_partners) {
                by_high.push_back(card_json(card));
            }
            data["by_average"] = by_avg;
            data["by_high_partners"] = by_high;
        }
        emit(out, "score-sets", params, data, csv, body);
        return 0;
    }

    if (backtrack_cmd->parsed()) {
        if (backtrack_target < 0 || backtrack_target > 99) {
            throw std::invalid_argument("backtrack: --target must lie in [0, 99]");
        }
        json params;
        params["target"] = backtrack_target;
        const std::vector<BacktrackSolution> solutions =
            backtrack(backtrack_target / 10, backtrack_target % 10);
        std::string body = "a1,a2,a3,start\n";
        json rows = json::array();
        for (const BacktrackSolution& sol : solutions) {
            body += std::to_string(sol.params[0]) + "," + std::to_string(sol.params[1]) + "," +
                    std::to_string(sol.params[2]) + "," + sol.row5.to_string() + "\n";
            rows.push_back(json{{"a1", sol.params[0]},
                                {"a2", sol.params[1]},
                                {"a3", sol.params[2]},
                                {"target", sol.target.to_string()},
                                {"row3", sol.row3.to_string()},
                                {"row4", sol.row4.to_string()},
                                {"start", sol.row5.to_string()}});
        }
        json data;
        data["solutions"] = rows;
        data["count"] = solutions.size();
        emit(out, "backtrack", params, data, csv, body);
        return 0;
    }

    err << "error: no subcommand\n";
    return 2;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const BudgetError& e) {
        err << "error: budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const RosterError& e) {
        err << "error: roster: " << e.what() << "\n";
        return 4;
    } catch (const UndeterminedError& e) {
        err << "error: undetermined: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace loves

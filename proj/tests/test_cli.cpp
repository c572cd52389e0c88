#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "loves/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int status = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.status = loves::dispatch(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string roster_path() {
    return std::string(LOVES_DATA_DIR) + "/uk_names_2010.csv";
}

std::vector<std::string> csv_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("play --string emits the worked example verdict") {
    const RunResult r = run_cli({"play", "--string", "11010"});
    REQUIRE(r.status == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["command"] == "play");
    CHECK(doc["format_version"] == 1);
    CHECK(doc["data"]["kind"] == "terminated");
    CHECK(doc["data"]["result"] == 54);
    CHECK(doc["data"]["decay_length"] == 3);
    CHECK(doc["data"]["final"] == "54");
    CHECK(doc["parameters"]["string"] == "11010");
}

TEST_CASE("play --names produces the same payload as the digit string") {
    const RunResult by_string = run_cli({"play", "--string", "11010"});
    const RunResult by_names = run_cli({"play", "--names", "Alice", "Bob", "--keyword", "LOVES"});
    REQUIRE(by_names.status == 0);
    const json a = json::parse(by_string.out);
    const json b = json::parse(by_names.out);
    CHECK(a["data"] == b["data"]);
    CHECK(b["parameters"]["names"] == json::array({"Alice", "Bob"}));
}

TEST_CASE("classify adds the chain trace") {
    const RunResult r = run_cli({"classify", "--string", "14121"});
    REQUIRE(r.status == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["data"]["kind"] == "looping");
    CHECK(doc["data"]["preperiod"] == 3);
    CHECK(doc["data"]["period"] == 2);
    CHECK(doc["data"]["cycle"] == json::array({"1814", "995"}));
    CHECK(doc["data"]["trace"]["decay_length"].is_null());
    CHECK(doc["data"]["trace"]["max_width"] >= 4);
}

TEST_CASE("sweep CSV carries its parameters and the fixed header") {
    const RunResult r = run_cli({"sweep", "--w", "4", "--cap", "4", "--csv"});
    REQUIRE(r.status == 0);
    const auto lines = csv_lines(r.out);
    CHECK(lines[0] == "# command=sweep");
    std::size_t header = 0;
    while (header < lines.size() && lines[header][0] == '#') {
        ++header;
    }
    REQUIRE(lines[header] == "result,count");
    // 100 result rows; counts sum to 4^4
    long total = 0;
    int rows = 0;
    for (std::size_t i = header + 1; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        total += std::stol(lines[i].substr(comma + 1));
        ++rows;
    }
    CHECK(rows == 100);
    CHECK(total <= 256);

    const RunResult rm =
        run_cli({"sweep", "--w", "4", "--cap", "4", "--csv", "--table", "magnitude"});
    const auto mlines = csv_lines(rm.out);
    std::size_t mheader = 0;
    while (mheader < mlines.size() && mlines[mheader][0] == '#') {
        ++mheader;
    }
    CHECK(mlines[mheader] == "m,terminated,looping,divergent,undetermined");
    long grand = 0;
    for (std::size_t i = mheader + 1; i < mlines.size(); ++i) {
        std::istringstream row(mlines[i]);
        std::string field;
        std::getline(row, field, ',');  // m
        while (std::getline(row, field, ',')) {
            grand += std::stol(field);
        }
    }
    CHECK(grand == 256);
}

TEST_CASE("sweep JSON reports totals and profile fractions") {
    const RunResult r = run_cli({"sweep", "--w", "3", "--cap", "10"});
    REQUIRE(r.status == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["data"]["set_size"] == 1000);
    CHECK(doc["data"]["totals"]["looping"] == 9);
    CHECK(doc["data"]["totals"]["divergent"] == 0);
    bool saw_fraction = false;
    for (const auto& row : doc["data"]["profile"]) {
        if (row["looping"]["num"] != 0) {
            saw_fraction = true;
            CHECK(row["looping"]["den"].get<long>() > 0);
        }
    }
    CHECK(saw_fraction);
}

TEST_CASE("phase CSV has the pinned header and the trivial cell") {
    const RunResult r = run_cli({"phase", "--w-min", "2", "--w-max", "3", "--m-min", "0",
                                 "--m-max", "27", "--csv"});
    REQUIRE(r.status == 0);
    const auto lines = csv_lines(r.out);
    std::size_t header = 0;
    while (header < lines.size() && lines[header][0] == '#') {
        ++header;
    }
    REQUIRE(lines[header] == "w,m,count,mean_dw,mean_dm,mean_n");
    CHECK(lines[header + 1] == "2,0,1,-1,0,0");
}

TEST_CASE("backtrack lists the worked example solution") {
    const RunResult r = run_cli({"backtrack", "--target", "54"});
    REQUIRE(r.status == 0);
    const json doc = json::parse(r.out);
    bool found = false;
    for (const auto& sol : doc["data"]["solutions"]) {
        if (sol["a1"] == 3 && sol["a2"] == 2 && sol["a3"] == 1) {
            found = true;
            CHECK(sol["start"] == "11010");
            CHECK(sol["target"] == "54");
        }
    }
    CHECK(found);
}

TEST_CASE("score-sets --set emits one scores row") {
    const RunResult r = run_cli(
        {"score-sets", "--set", "02000", "--roster", roster_path(), "--csv"});
    REQUIRE(r.status == 0);
    const auto lines = csv_lines(r.out);
    std::size_t header = 0;
    while (header < lines.size() && lines[header][0] == '#') {
        ++header;
    }
    REQUIRE(lines[header] == "set,m,avg_num,avg_den,avg,high_partners");
    CHECK(lines[header + 1].rfind("02000,2,", 0) == 0);
    CHECK(lines[header + 1].find("67.42") != std::string::npos);
}

TEST_CASE("names-pairings CSV rows") {
    const RunResult r = run_cli({"names-pairings", "--roster", roster_path(), "--csv"});
    REQUIRE(r.status == 0);
    const auto lines = csv_lines(r.out);
    std::size_t header = 0;
    while (header < lines.size() && lines[header][0] == '#') {
        ++header;
    }
    REQUIRE(lines[header] == "name_a,name_b,kind,result");
    CHECK(lines.size() - header - 1 == 4950);
}

TEST_CASE("the exhaustive w=5 sweep CSV carries the 97-string result row") {
    const RunResult r = run_cli({"sweep", "--w", "5", "--cap", "10", "--csv"});
    REQUIRE(r.status == 0);
    bool found = false;
    for (const auto& line : csv_lines(r.out)) {
        if (line == "99,97") {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("identical invocations give identical bytes") {
    const std::vector<std::string> cmd = {"sweep", "--w", "4", "--cap", "6", "--csv"};
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.out == b.out);

    const RunResult j1 = run_cli({"play", "--string", "11010"});
    const RunResult j2 = run_cli({"play", "--string", "11010"});
    CHECK(j1.out == j2.out);
}

TEST_CASE("worker count does not change sweep bytes") {
    const RunResult one = run_cli({"sweep", "--w", "4", "--cap", "10", "--jobs", "1", "--csv"});
    RunResult four = run_cli({"sweep", "--w", "4", "--cap", "10", "--jobs", "4", "--csv"});
    // job count is echoed in the parameter block; data rows must match
    const auto strip = [](const std::string& text) {
        std::string kept;
        for (const auto& line : csv_lines(text)) {
            if (line.rfind("# jobs=", 0) != 0) {
                kept += line + "\n";
            }
        }
        return kept;
    };
    CHECK(strip(one.out) == strip(four.out));
}

TEST_CASE("error paths exit nonzero with distinct messages") {
    RunResult r = run_cli({"no-such-command"});
    CHECK(r.status != 0);

    r = run_cli({"play", "--string", "1a2"});
    CHECK(r.status != 0);
    CHECK(r.err.find("invalid argument") != std::string::npos);

    r = run_cli({"play"});
    CHECK(r.status != 0);

    r = run_cli({"names-pairings", "--roster", "/nonexistent/roster.csv"});
    CHECK(r.status == 4);
    CHECK(r.err.find("roster") != std::string::npos);

    setenv("LOVES_BUDGET", "10", 1);
    r = run_cli({"sweep", "--w", "5", "--cap", "10"});
    CHECK(r.status == 3);
    CHECK(r.err.find("budget exceeded") != std::string::npos);

    setenv("LOVES_BUDGET", "banana", 1);
    r = run_cli({"sweep", "--w", "3", "--cap", "2"});
    CHECK(r.status != 0);
    CHECK(r.err.find("LOVES_BUDGET") != std::string::npos);
    unsetenv("LOVES_BUDGET");
}

#include "doctest.h"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// HILBGEN_BIN and HILBGEN_SCHEMA are injected by the build so the suite can
// drive the installed binary exactly the way a user would.

namespace {

using json = nlohmann::json;

struct RunResult {
    int rc = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int seq = 0;
    std::string tag = std::to_string(++seq);
    std::string out_path = "cli_stdout_" + tag + ".txt";
    std::string err_path = "cli_stderr_" + tag + ".txt";
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + HILBGEN_BIN + " " + args +
                      " >" + out_path + " 2>" + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    if (status != -1 && WIFEXITED(status)) r.rc = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) rows.push_back(split_csv_line(line));
    return rows;
}

// Small structural validator for the keywords the shipped schema actually
// uses: type, const, required, properties, additionalProperties: false,
// items, minItems, minimum.
void validate_node(const json& sch, const json& inst, const std::string& path,
                   std::vector<std::string>& errs) {
    if (sch.contains("const") && inst != sch["const"])
        errs.push_back(path + ": const mismatch");
    if (sch.contains("type")) {
        const std::string t = sch["type"].get<std::string>();
        bool ok = (t == "object" && inst.is_object()) || (t == "array" && inst.is_array()) ||
                  (t == "string" && inst.is_string()) || (t == "boolean" && inst.is_boolean()) ||
                  (t == "integer" && inst.is_number_integer()) ||
                  (t == "number" && inst.is_number());
        if (!ok) {
            errs.push_back(path + ": expected type " + t);
            return;
        }
    }
    if (sch.contains("minimum") && inst.is_number() &&
        inst.get<double>() < sch["minimum"].get<double>())
        errs.push_back(path + ": below minimum");
    if (sch.contains("required"))
        for (const auto& key : sch["required"])
            if (!inst.contains(key.get<std::string>()))
                errs.push_back(path + ": missing required " + key.get<std::string>());
    if (sch.contains("properties") && inst.is_object()) {
        const json& props = sch["properties"];
        for (auto it = props.begin(); it != props.end(); ++it)
            if (inst.contains(it.key()))
                validate_node(it.value(), inst.at(it.key()), path + "." + it.key(), errs);
        bool closed = sch.contains("additionalProperties") &&
                      sch["additionalProperties"].is_boolean() &&
                      !sch["additionalProperties"].get<bool>();
        if (closed)
            for (auto it = inst.begin(); it != inst.end(); ++it)
                if (!props.contains(it.key()))
                    errs.push_back(path + ": unexpected property " + it.key());
    }
    if (inst.is_array()) {
        if (sch.contains("minItems") && inst.size() < sch["minItems"].get<std::size_t>())
            errs.push_back(path + ": too few items");
        if (sch.contains("items"))
            for (std::size_t i = 0; i < inst.size(); ++i)
                validate_node(sch["items"], inst[i], path + "[" + std::to_string(i) + "]", errs);
    }
}

std::vector<std::string> validate_against_shipped_schema(const json& inst) {
    json sch = json::parse(slurp(HILBGEN_SCHEMA));
    std::vector<std::string> errs;
    validate_node(sch, inst, "$", errs);
    return errs;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (ch < '0' || ch > '9') return false;
    return true;
}

}  // namespace

TEST_CASE("exact table in csv carries exact integers and flags") {
    auto r = run_cli("exact --k 24 --n 1 --m 0 --format csv");
    REQUIRE(r.rc == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"n", "m", "exact_value", "p_k", "sum_rule_ok",
                                              "beta_k"});
    REQUIRE(rows[1].size() == 6);
    CHECK(rows[1][0] == "1");
    CHECK(rows[1][1] == "0");
    CHECK(rows[1][2] == "20");
    CHECK(rows[1][3] == "24");
    CHECK(rows[1][4] == "true");
    CHECK(rows[1][5].substr(0, 9) == "6.2831853");
}

TEST_CASE("exact table in json keeps big integers as decimal strings") {
    auto r = run_cli("exact --k 24 --n 1 --m 0 --format json");
    REQUIRE(r.rc == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema"] == "hilbgen-table/1");
    CHECK(doc["command"] == "exact");
    CHECK(doc["k"] == 24);
    REQUIRE(doc["rows"].size() == 1);
    const json& row = doc["rows"][0];
    CHECK(row["n"] == 1);
    CHECK(row["exact_value"].is_string());
    CHECK(row["exact_value"] == "20");
    CHECK(row["p_k"] == "24");
    CHECK(row["sum_rule_ok"] == true);
    CHECK(row["beta_k"].is_number());

    // values far beyond double range still round-trip digit for digit
    auto big = run_cli("exact --k 24 --n 80 --m 0 --format csv");
    REQUIRE(big.rc == 0);
    auto rows = parse_csv(big.out);
    REQUIRE(rows.size() == 2);
    CHECK(all_digits(rows[1][2]));
    CHECK(rows[1][2].size() > 20);
}

TEST_CASE("asym table reports ratios near one and difference pairs") {
    auto r = run_cli("asym --k 24 --n 100 --m 0..2 --precision 128 --format json");
    REQUIRE(r.rc == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 3);
    const json& first = doc["rows"][0];
    CHECK(first["m"] == 0);
    double ratio = first["ratio"].get<double>();
    CHECK(ratio > 1.0);
    CHECK(ratio < 1.05);
    CHECK(first["pair_m"].is_null());

    const json& second = doc["rows"][1];
    CHECK(second["pair_m"] == 0);
    CHECK(second["diff_exact"].is_string());
    CHECK(second["diff_estimate"].is_number());
    CHECK(second["diff_ratio"].is_number());
}

TEST_CASE("profile table flags the window and summarizes per index") {
    auto r = run_cli("profile --k 24 --n 100 --precision 128 --format json");
    REQUIRE(r.rc == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 4);  // m in {-1,0,1} plus the summary line
    int data_rows = 0;
    bool saw_summary = false;
    for (const json& row : doc["rows"]) {
        if (row["row_type"] == "data") {
            ++data_rows;
            CHECK(row["in_window"] == true);
            CHECK(std::abs(row["relative_deviation"].get<double>()) < 0.1);
        } else {
            CHECK(row["row_type"] == "summary");
            saw_summary = true;
            CHECK(row["relative_deviation"].get<double>() < 0.1);
        }
        CHECK(row["n"] == 100);
    }
    CHECK(data_rows == 3);
    CHECK(saw_summary);
}

TEST_CASE("oracle table cross-checks the quadrature against the series") {
    auto r = run_cli("oracle --k 24 --n 2 --m 0..2 --samples 32 --precision 96 --format csv");
    REQUIRE(r.rc == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 7);
        CHECK(all_digits(rows[i][2]));
        CHECK(std::stod(rows[i][5]) < 1e-6);   // rel_diff
        CHECK(std::stod(rows[i][6]) < 1e-6);   // self_delta
    }
}

TEST_CASE("verify report validates against the shipped schema") {
    auto r = run_cli("verify --skip oracle --format json");
    REQUIRE(r.rc == 0);
    json doc = json::parse(r.out);
    auto errs = validate_against_shipped_schema(doc);
    for (const auto& e : errs) MESSAGE(e);
    CHECK(errs.empty());
    CHECK(doc["schema"] == "hilbgen-verify-report/1");
    CHECK(doc["all_passed"] == true);
    CHECK(doc["counts"]["skipped"] == 1);
    CHECK(doc["counts"]["failed"] == 0);
    REQUIRE(doc["checks"].size() == 9);
    // stderr carries the human-readable lines, stdout stays machine-clean
    CHECK(r.err.find("ok") != std::string::npos);
    CHECK(r.out.find("  ok") == std::string::npos);
}

TEST_CASE("verify output is deterministic without timings") {
    const char* args = "verify --skip oracle --skip profile --skip modular --format json";
    auto first = run_cli(args);
    auto second = run_cli(args);
    REQUIRE(first.rc == 0);
    REQUIRE(second.rc == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
}

TEST_CASE("an injected coefficient error turns the run red") {
    auto r = run_cli(
        "verify --inject-bernoulli-error --skip series --skip symmetry --skip positivity "
        "--skip sum --skip bessel --skip profile --skip oracle --skip modular --format json");
    CHECK(r.rc == 1);
    json doc = json::parse(r.out);
    CHECK(doc["all_passed"] == false);
    CHECK(doc["counts"]["failed"] == 1);
    bool found = false;
    for (const json& c : doc["checks"])
        if (c["name"] == "d_coeff closed form") {
            found = true;
            CHECK(c["passed"] == false);
            CHECK(c["skipped"] == false);
        }
    CHECK(found);
    CHECK(r.err.find("failed checks:") != std::string::npos);
}

TEST_CASE("configuration errors and budget limits map to distinct exit codes") {
    CHECK(run_cli("exact --n 5..x").rc == 2);
    CHECK(run_cli("exact --n 7..3").rc == 2);
    CHECK(run_cli("profile --n 1").rc == 2);
    CHECK(run_cli("asym --n 100 --terms 0").rc == 2);
    CHECK(run_cli("exact --precision 32 --n 1").rc == 2);
    CHECK(run_cli("exact --n 1500").rc == 3);
    CHECK(run_cli("oracle --n 50").rc == 3);
    CHECK(run_cli("nonsense").rc == 2);
}

TEST_CASE("precision can come from the environment") {
    auto r = run_cli("exact --n 1 --m 0 --format json", "HILBGEN_PRECISION=96");
    REQUIRE(r.rc == 0);
    json doc = json::parse(r.out);
    CHECK(doc["precision"] == 96);

    // an explicit flag still wins
    auto r2 = run_cli("exact --n 1 --m 0 --precision 128 --format json",
                      "HILBGEN_PRECISION=96");
    REQUIRE(r2.rc == 0);
    CHECK(json::parse(r2.out)["precision"] == 128);
}

TEST_CASE("--out writes the same bytes a stdout run produces") {
    std::string path = "cli_out_file.json";
    auto to_file = run_cli("exact --n 2 --m 0..1 --format json --out " + path);
    REQUIRE(to_file.rc == 0);
    CHECK(to_file.out.empty());
    auto to_stdout = run_cli("exact --n 2 --m 0..1 --format json");
    REQUIRE(to_stdout.rc == 0);
    CHECK(slurp(path) == to_stdout.out);
    std::remove(path.c_str());
}

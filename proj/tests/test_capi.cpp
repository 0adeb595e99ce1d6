#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "zchelp/zchelp.h"

namespace {

std::string take(char* raw) {
    REQUIRE(raw != nullptr);
    std::string s(raw);
    zchelp_string_free(raw);
    return s;
}

nlohmann::json parse(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    return j;
}

}  // namespace

TEST_CASE("basis and expansion render through the boundary") {
    char* out = nullptr;
    REQUIRE(zchelp_render_basis(24, "json", &out) == ZCHELP_OK);
    nlohmann::json basis = parse(take(out));
    CHECK(basis["n"] == 24);
    CHECK(basis["labels"] == nlohmann::json({"a4", "a5", "a10", "a11"}));
    CHECK(basis["residues"].size() == 8);

    REQUIRE(zchelp_render_expand(24, 2, "json", &out) == ZCHELP_OK);
    nlohmann::json exp = parse(take(out));
    CHECK(exp["coeffs"] == nlohmann::json({{"a10", -1}}));

    REQUIRE(zchelp_render_expand(24, 2, "text", &out) == ZCHELP_OK);
    CHECK(take(out) == "-a10\n");
}

TEST_CASE("status codes and the error string") {
    char* out = nullptr;
    CHECK(zchelp_render_basis(0, "json", &out) == ZCHELP_USAGE);
    CHECK(std::strlen(zchelp_last_error()) > 0);
    CHECK(zchelp_render_basis(8, "yaml", &out) == ZCHELP_USAGE);
    CHECK(std::string(zchelp_last_error()) == "unknown format: yaml");
    CHECK(zchelp_render_basis(8, "json", nullptr) == ZCHELP_USAGE);
    CHECK(zchelp_render_classes(6, "json", &out) == ZCHELP_USAGE);

    REQUIRE(zchelp_render_basis(8, "json", &out) == ZCHELP_OK);
    CHECK(std::strlen(zchelp_last_error()) == 0);
    take(out);
}

TEST_CASE("class tables render with provenance") {
    char* out = nullptr;
    REQUIRE(zchelp_render_classes(5, "json", &out) == ZCHELP_OK);
    nlohmann::json j = parse(take(out));
    CHECK(j["q"] == 5);
    CHECK(j["field"] == "prime field");
    CHECK(j["classes"].size() == 9);

    REQUIRE(zchelp_render_classes(9, "json", &out) == ZCHELP_OK);
    j = parse(take(out));
    CHECK(j["classes"].size() == 13);
    CHECK(j["field"] == "F9 = F3[w]/(w^2+1)");
}

TEST_CASE("solve handles report state and render determinism") {
    zchelp_solve_opts opts{};
    opts.q = 7;
    opts.n = 8;
    opts.normalize = 1;
    zchelp_report* rep = nullptr;
    REQUIRE(zchelp_solve(&opts, &rep) == ZCHELP_OK);
    CHECK(zchelp_report_complete(rep) == 1);
    CHECK(zchelp_report_all_trivial(rep) == 1);
    CHECK(zchelp_report_survivor_count(rep) == 1);
    CHECK(zchelp_report_exit_code(rep) == 0);

    char* first = nullptr;
    char* second = nullptr;
    REQUIRE(zchelp_report_render(rep, "json", &first) == ZCHELP_OK);
    REQUIRE(zchelp_report_render(rep, "json", &second) == ZCHELP_OK);
    std::string a = take(first);
    std::string b = take(second);
    CHECK(a == b);
    nlohmann::json j = parse(a);
    CHECK(j["complete"] == true);
    CHECK(j["survivors"][0]["eps"] == nlohmann::json({{"1", 1}}));
    CHECK(j["survivors"][0]["multiplicities"]["1"] ==
          nlohmann::json({0, 1, 0, 0, 0}));
    zchelp_report_free(rep);
}

TEST_CASE("solve rejects out-of-scope and malformed input") {
    zchelp_solve_opts opts{};
    opts.q = 5;
    opts.n = 15;
    opts.normalize = 1;
    zchelp_report* rep = nullptr;
    CHECK(zchelp_solve(&opts, &rep) == ZCHELP_SCOPE);

    opts.n = 4;
    opts.power_json = "not json";
    CHECK(zchelp_solve(&opts, &rep) == ZCHELP_USAGE);
    opts.power_json = "{\"2\": {\"2\": 1}}";  // missing the divisor 4
    CHECK(zchelp_solve(&opts, &rep) == ZCHELP_USAGE);
}

TEST_CASE("custom power data reproduces the inductive run") {
    zchelp_solve_opts opts{};
    opts.q = 5;
    opts.n = 4;
    opts.normalize = 1;
    zchelp_report* inductive = nullptr;
    REQUIRE(zchelp_solve(&opts, &inductive) == ZCHELP_OK);

    opts.power_json = "{\"2\": {\"2\": 1}, \"4\": {\"0\": 1}}";
    zchelp_report* custom = nullptr;
    REQUIRE(zchelp_solve(&opts, &custom) == ZCHELP_OK);

    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(zchelp_report_render(inductive, "csv", &a) == ZCHELP_OK);
    REQUIRE(zchelp_report_render(custom, "csv", &b) == ZCHELP_OK);
    std::string ra = take(a);
    std::string rb = take(b);
    CHECK(ra.substr(ra.find('\n')) == rb.substr(rb.find('\n')));
    zchelp_report_free(inductive);
    zchelp_report_free(custom);
}

TEST_CASE("scan and batch verification verdicts") {
    char* out = nullptr;
    int verdict = -1;
    REQUIRE(zchelp_render_scan(7, 1, 0, "json", &out, &verdict) == ZCHELP_OK);
    nlohmann::json j = parse(take(out));
    CHECK(verdict == 0);
    CHECK(j["q"] == 7);
    CHECK(j["pass"] == true);
    CHECK(j["orders"].size() == 4);

    int64_t qs[2] = {5, 7};
    REQUIRE(zchelp_render_verify(qs, 2, 1, 0, "json", &out, &verdict) == ZCHELP_OK);
    j = parse(take(out));
    CHECK(verdict == 0);
    CHECK(j["pass"] == true);
    CHECK(j["groups"].size() == 2);

    CHECK(zchelp_render_verify(nullptr, 0, 1, 0, "json", &out, &verdict) ==
          ZCHELP_USAGE);
}

TEST_CASE("the 2-power instance picks the smallest group") {
    char* out = nullptr;
    int verdict = -1;
    REQUIRE(zchelp_render_prop41(3, 0, "json", &out, &verdict) == ZCHELP_OK);
    nlohmann::json j = parse(take(out));
    CHECK(verdict == 0);
    CHECK(j["r"] == 3);
    CHECK(j["solve"]["q"] == 7);
    CHECK(j["solve"]["n"] == 8);
    CHECK(j["solve"]["complete"] == true);

    REQUIRE(zchelp_render_prop41(4, 0, "json", &out, &verdict) == ZCHELP_OK);
    j = parse(take(out));
    CHECK(verdict == 0);
    CHECK(j["solve"]["q"] == 17);
}

TEST_CASE("case exclusions and the dual-route scan") {
    char* out = nullptr;
    int verdict = -1;
    REQUIRE(zchelp_render_case(24, 3, "json", &out, &verdict) == ZCHELP_OK);
    nlohmann::json j = parse(take(out));
    CHECK(verdict == 0);
    CHECK(j["excluded"] == true);

    REQUIRE(zchelp_render_case(24, 2, "json", &out, &verdict) == ZCHELP_OK);
    j = parse(take(out));
    CHECK(verdict == 3);
    CHECK(j["excluded"] == false);

    REQUIRE(zchelp_render_dual_scan(120, "json", &out, &verdict) == ZCHELP_OK);
    j = parse(take(out));
    CHECK(verdict == 3);
    CHECK(j["discrepancies"] == nlohmann::json({24, 40, 56, 88, 104}));
}

TEST_CASE("identity checks pass through the boundary") {
    char* out = nullptr;
    int verdict = -1;
    REQUIRE(zchelp_render_identities(3, 50, 9, "json", &out, &verdict) ==
            ZCHELP_OK);
    nlohmann::json j = parse(take(out));
    CHECK(verdict == 0);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() > 5);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "rsum/cli.hpp"
#include "rsum/json_io.hpp"
#include "rsum/rng.hpp"
#include "rsum/witness.hpp"

using namespace rsum;

namespace {

ResidueSet set_of(PrimeModulus p, std::initializer_list<long long> xs) {
    return ResidueSet::from_elements(p, std::vector<long long>(xs));
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string run_binary(const std::string& args) {
    const std::string cmd = std::string(RSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    pclose(pipe);
    return out;
}

}  // namespace

TEST_CASE("set literal parsing") {
    PrimeModulus p(7);
    CHECK(parse_set_literal("0,1,2", p) == set_of(p, {0, 1, 2}));
    CHECK(parse_set_literal("", p).empty());
    CHECK(parse_set_literal("6", p) == set_of(p, {6}));
    CHECK_THROWS_AS(parse_set_literal("1,1", p), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(parse_set_literal("7", p), std::invalid_argument);     // not canonical
    CHECK_THROWS_AS(parse_set_literal("-1", p), std::invalid_argument);
    CHECK_THROWS_AS(parse_set_literal("1,x", p), std::invalid_argument);
    CHECK_THROWS_AS(parse_set_literal("1.5", p), std::invalid_argument);
    CHECK(set_literal(set_of(p, {4, 0, 2})) == "0,2,4");
}

TEST_CASE("value round-trips through JSON") {
    PrimeModulus p(7);
    Prng rng(3);

    auto s = set_of(p, {1, 3, 6});
    CHECK(residue_set_from_json(p, Json::parse(to_json(s).dump())) == s);

    std::vector<Rational> coeffs;
    for (int i = 0; i < 6; ++i) {
        Rational q(static_cast<long>(rng.int_in(-20, 20)), static_cast<long>(rng.int_in(1, 9)));
        q.canonicalize();
        coeffs.push_back(q);
    }
    auto x = CycNum::from_coeffs(p, coeffs);
    CHECK(cycnum_from_json(p, Json::parse(to_json(x).dump())) == x);

    auto f = construct_witness(p, set_of(p, {0, 1, 4, 5}), set_of(p, {2, 3, 4, 6}), 5);
    CHECK(zpfunction_from_json(p, Json::parse(to_json(f).dump())) == f);

    auto b = bound_table(p, 3, 4, 1);
    CHECK(bound_report_from_json(Json::parse(to_json(b).dump())) == b);
    auto b2 = bound_table(p, 3, 3, 1);  // eh present
    CHECK(bound_report_from_json(Json::parse(to_json(b2).dump())) == b2);

    CHECK_THROWS_AS(rational_from_json(Json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json("grape")), std::invalid_argument);
    CHECK(rational_from_json(Json("-6/4")) == Rational(-3, 2));
}

TEST_CASE("bound report key order is cd, eh, thm2, pan_sun, clamped") {
    auto j = to_json(bound_table(PrimeModulus(7), 3, 4, 1));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"cd", "eh", "thm2", "pan_sun", "clamped"});
}

TEST_CASE("report JSON parses back to an identical tree") {
    PrimeModulus p(5);
    auto trace = trace_restricted_bound(p, set_of(p, {0, 1, 2}), set_of(p, {0, 1, 2}),
                                        set_of(p, {0}), 7);
    const Json tj = to_json(trace);
    CHECK(Json::parse(tj.dump()) == tj);
    CHECK(tj.at("checks").size() == trace.checks.size());

    SearchSpec spec{p};
    spec.nA = 3;
    spec.nB = 3;
    spec.nS = 1;
    const Json sj = to_json(exhaustive_min(spec));
    CHECK(Json::parse(sj.dump(2)) == sj);
    CHECK(!sj.contains("elapsed_seconds"));  // timing never enters JSON
}

TEST_CASE("CSV headers are fixed") {
    CHECK(bound_report_csv(bound_table(PrimeModulus(7), 3, 4, 1))
              .starts_with("cd,eh,thm2,pan_sun,clamped\n"));
    SearchSpec spec{PrimeModulus(5)};
    spec.nA = 3;
    spec.nB = 3;
    spec.nS = 1;
    auto rep = exhaustive_min(spec);
    CHECK(search_report_csv(rep).starts_with(
        "p,a_size,b_size,s_size,mode,min_c,thm2,pan_sun,tight_thm2,tight_pan_sun,"
        "conjecture_value,witness_a,witness_b,witness_s\n"));
    auto cells = conjecture_scan(PrimeModulus(3), 1);
    CHECK(scan_csv(PrimeModulus(3), cells)
              .starts_with("p,a_size,b_size,s_size,configs,min_c_all,configs_a_neq_b,"
                           "min_c_a_neq_b,thm2,pan_sun,conjecture,s_even,holds_even_s,"
                           "holds_a_neq_b\n"));
}

TEST_CASE("CLI success paths exit 0") {
    CHECK(run_cli({"bounds", "--p", "7", "--a-size", "3", "--b-size", "4", "--s-size", "1"}).code == 0);
    CHECK(run_cli({"sumset", "--p", "7", "--a", "0,1,2", "--b", "0,1,2,3", "--s", "0"}).code == 0);
    CHECK(run_cli({"uncertainty", "--p", "5", "--trials", "20", "--seed", "1"}).code == 0);
    CHECK(run_cli({"witness", "--p", "5", "--a", "0,1,2", "--b", "0,2,4"}).code == 0);
    CHECK(run_cli({"trace", "--p", "5", "--a", "0,1,2", "--b", "0,1,2", "--s", "0"}).code == 0);
    CHECK(run_cli({"search", "--p", "5", "--a-size", "3", "--b-size", "3", "--s-size", "1"}).code == 0);
    CHECK(run_cli({"scan", "--p", "3", "--max-s", "1"}).code == 0);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("CLI usage errors exit 2 with a diagnostic") {
    const std::vector<std::vector<std::string>> bad = {
        {},                                                            // missing subcommand
        {"frobnicate"},                                                // unknown subcommand
        {"bounds", "--p", "6", "--a-size", "1", "--b-size", "1"},      // composite p
        {"bounds", "--p", "7", "--a-size", "9", "--b-size", "1"},      // size out of range
        {"bounds", "--p", "7"},                                        // missing required
        {"bounds", "--p", "7", "--a-size", "1", "--b-size", "1", "--wat", "1"},
        {"sumset", "--p", "7", "--a", "0,0", "--b", "1"},              // duplicate element
        {"sumset", "--p", "7", "--a", "7", "--b", "1"},                // residue out of range
        {"sumset", "--p", "7", "--a", "zebra", "--b", "1"},            // malformed literal
        {"sumset", "--p", "67", "--a", "0", "--b", "1"},               // above the ceiling
        {"witness", "--p", "5", "--a", "0,1", "--b", "0,1"},           // |A|+|B| < p+1
        {"witness", "--p", "2", "--a", "0,1", "--b", "0,1"},           // even p
        {"trace", "--p", "5", "--a", "0", "--b", "0,1", "--s", ""},    // |A| < 2
        {"search", "--p", "5", "--a-size", "3", "--b-size", "3", "--samples", "5", "--exhaustive"},
        {"search", "--p", "5", "--a-size", "0", "--b-size", "3"},
        {"scan", "--p", "5", "--max-s", "9"},
        {"bounds", "--p", "7", "--a-size", "3", "--b-size", "4", "--format", "yaml"},
    };
    for (const auto& args : bad) {
        auto r = run_cli(args);
        CAPTURE(args.empty() ? std::string("<empty>") : args[0]);
        CHECK(r.code == 2);
        CHECK(!r.err.empty());
    }
}

TEST_CASE("seeded subcommands are byte-identical across runs") {
    const std::vector<std::string> wit = {"witness", "--p", "7", "--a", "0,1,2,3",
                                          "--b", "2,3,4,5", "--seed", "11"};
    CHECK(run_cli(wit).out == run_cli(wit).out);

    const std::vector<std::string> tr = {"trace", "--p", "7", "--a", "0,1,2",
                                         "--b", "0,1,2,3", "--s", "0", "--seed", "4"};
    CHECK(run_cli(tr).out == run_cli(tr).out);

    const std::vector<std::string> se = {"search", "--p", "11", "--a-size", "4", "--b-size", "4",
                                         "--s-size", "1", "--samples", "2000", "--seed", "5"};
    const std::string one = run_cli(se).out;
    CHECK(one == run_cli(se).out);
    auto with_jobs = se;
    with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
    CHECK(one == run_cli(with_jobs).out);
}

TEST_CASE("installed binary emits the documented report") {
    const std::string out = run_binary("bounds --p 7 --a-size 3 --b-size 4 --s-size 1");
    const Json j = Json::parse(out);
    CHECK(j.at("thm2") == 4);
    CHECK(j.at("cd") == 6);
    const std::string csv = run_binary("scan --p 3 --max-s 0 --format csv");
    CHECK(csv.starts_with("p,a_size,b_size,s_size,configs"));
}

TEST_CASE("prime ceilings respond to the environment overrides") {
    auto run_binary_raw = [](const std::string& cmd_line) {
        FILE* pipe = popen(cmd_line.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[4096];
        while (fread(buf, 1, sizeof buf, pipe) > 0) {
        }
        return WEXITSTATUS(pclose(pipe));
    };
    const std::string bin = RSUM_CLI_PATH;
    // default field ceiling is 31: witness at p=37 is rejected up front
    CHECK(run_binary_raw(bin + " witness --p 37 --a 0 --b 0 2>/dev/null") == 2);
    // lowering the ceilings turns previously fine calls into usage errors
    CHECK(run_binary_raw("RSUM_MAX_SET_PRIME=5 " + bin +
                         " bounds --p 7 --a-size 1 --b-size 1 2>/dev/null") == 2);
    CHECK(run_binary_raw("RSUM_MAX_FIELD_PRIME=5 " + bin +
                         " witness --p 7 --a 0,1,2,3 --b 0,1,2,3 2>/dev/null") == 2);
    // ...while set arithmetic at p=7 only needs the set ceiling
    CHECK(run_binary_raw("RSUM_MAX_FIELD_PRIME=5 " + bin +
                         " sumset --p 7 --a 0,1 --b 0,1 2>/dev/null") == 0);
}

TEST_CASE("trace accepts an omitted S (empty set)") {
    auto r = run_cli({"trace", "--p", "5", "--a", "0,1,2", "--b", "0,1,2,3"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("context").at("s") == Json::array());
    CHECK(j.at("branch") == "full");  // |A|+|B| = 7 >= p+1
    CHECK(j.at("derived_bound") == 5);
}

TEST_CASE("a zero-draw sampled search reports the empty sentinel") {
    auto r = run_cli({"search", "--p", "11", "--a-size", "4", "--b-size", "4", "--s-size", "1",
                      "--samples", "0"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("spec").at("mode") == "sampled");
    CHECK(j.at("empty_scan") == true);
    CHECK(j.at("min_c") == 11);
}

TEST_CASE("csv is rejected where no CSV schema exists") {
    CHECK(run_cli({"trace", "--p", "5", "--a", "0,1,2", "--b", "0,1,2", "--s", "0",
                   "--format", "csv"}).code == 2);
    CHECK(run_cli({"witness", "--p", "5", "--a", "0,1,2", "--b", "0,2,4", "--format", "csv"}).code == 2);
    CHECK(run_cli({"sumset", "--p", "5", "--a", "0", "--b", "0", "--format", "csv"}).code == 2);
    CHECK(run_cli({"uncertainty", "--p", "5", "--trials", "1", "--format", "csv"}).code == 2);
    CHECK(run_cli({"scan", "--p", "3", "--max-s", "0", "--format", "human"}).code == 2);
}

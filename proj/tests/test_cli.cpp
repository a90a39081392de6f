#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cdg/cli.hpp"

using namespace cdg;
using nlohmann::json;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute emits the worked codegree set") {
    CliResult r = run({"compute", "--group", "psl:3:4"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["codegrees"] == json::array({1, 315, 320, 448, 576, 1008}));
    CHECK(j["order"] == 20160);
    CHECK(j["source"] == "brute-force");
}

TEST_CASE("identical invocations produce byte-identical output") {
    CliResult a = run({"formula", "--family", "PSL3", "--q", "7"});
    CliResult b = run({"formula", "--family", "PSL3", "--q", "7"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CliResult c = run({"compute", "--group", "name:M11"});
    CliResult d = run({"compute", "--group", "name:M11"});
    CHECK(c.out == d.out);
}

TEST_CASE("recognize round-trips the compute output") {
    CliResult c = run({"compute", "--group", "psl:2:8"});
    REQUIRE(c.status == 0);
    json j = json::parse(c.out);
    std::string path = "cli_set_tmp.txt";
    {
        std::ofstream f(path);
        f << "# codegrees emitted by compute\n";
        for (const auto& v : j["codegrees"]) f << v.get<uint64_t>() << "\n";
    }
    CliResult r = run({"recognize", "--set-file", path});
    std::remove(path.c_str());
    REQUIRE(r.status == 0);
    json rj = json::parse(r.out);
    REQUIRE(rj["matches"].size() == 1);
    CHECK(rj["matches"][0]["family"] == "PSL2_EVEN");
    CHECK(rj["matches"][0]["q"] == 8);
}

TEST_CASE("recognize from an inline set") {
    CliResult r = run({"recognize", "--set", "1,12,15,20"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["matches"].size() == 1);
    CHECK(j["matches"][0]["family"] == "PSL2_EVEN");
    CHECK(j["matches"][0]["q"] == 4);
    CHECK(j["diagnostics"]["size"] == 4);
}

TEST_CASE("formula carries the factored forms") {
    CliResult r = run({"formula", "--family", "M11"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["source"] == "formula");
    bool found = false;
    for (const auto& f : j["factored"])
        if (f == "2^3·3^2·11") found = true;
    CHECK(found);
}

TEST_CASE("verify subcommand exit codes") {
    // diophantine suite passes quickly at a small bound
    CliResult ok = run({"verify", "--suite", "diophantine", "--bound", "500"});
    CHECK(ok.status == 0);
    json arr = json::parse(ok.out);
    CHECK(arr.is_array());
    CHECK(arr.size() == 75);
    for (const auto& rep : arr) CHECK(rep["outcome"] == "PASS");

    // the SU3 index sweep carries the known q=5 exception, so `indices` exits 1
    CliResult fail = run({"verify", "--suite", "indices"});
    CHECK(fail.status == 1);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({"bogus"}).status == 2);
    CHECK(run({"compute"}).status == 2);                       // missing --group
    CHECK(run({"recognize"}).status == 2);                     // missing inputs
    CHECK(run({"formula", "--family", "NOPE"}).status == 2);
    CHECK(run({"compute", "--group", "psl:3:6"}).status == 2); // not a prime power
    CHECK(run({}).status == 2);
}

TEST_CASE("info reports orders, counts and subgroup tables") {
    CliResult r = run({"info", "--family", "PSL3", "--q", "5"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["expected_order"] == 372000);
    CHECK(j["cd_count"] == 8);
    bool parabolic = false;
    for (const auto& row : j["max_subgroups"])
        if (row["structure"] == "E_q^2 : GL(2,q)") {
            parabolic = true;
            CHECK(row["order"] == 12000);
            CHECK(row["index"] == 31);
        }
    CHECK(parabolic);
}

TEST_CASE("dump-table exposes exact values") {
    CliResult r = run({"compute", "--group", "name:A7", "--dump-table"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j.contains("table"));
    CHECK(j["table"]["rows"].size() == 9);
    // each dumped value row has conductor-many coefficients
    size_t conductor = j["table"]["conductor"].get<size_t>();
    CHECK(j["table"]["rows"][0]["values"][0].size() == conductor);
}

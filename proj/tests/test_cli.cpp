#include "doctest.h"

#include "aaslab/cache.hpp"
#include "aaslab/cli.hpp"
#include "aaslab/errors.hpp"
#include "aaslab/spec_parser.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace aaslab;
using aaslab::cli::Command;
using aaslab::cli::execute;

namespace {

std::size_t parse_error_at(std::string_view text)
{
    try {
        cli::parse_group_spec(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

Command command(std::string name, std::vector<std::string> args)
{
    Command c;
    c.name = std::move(name);
    c.args = std::move(args);
    c.options.no_cache = true;
    return c;
}

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() / ("aaslab-test-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("group spec grammar")
{
    CHECK(cli::parse_group_spec("A5") == GroupSpec::alternating(5));
    CHECK(cli::parse_group_spec(" PSL(2, 7) ") == GroupSpec::psl2(7));
    CHECK(cli::parse_group_spec("SL(2,8)") == GroupSpec::sl2(8));
    CHECK(cli::parse_group_spec("Heis(3)xC3") == GroupSpec::product({GroupSpec::heisenberg(3), GroupSpec::cyclic(3)}));
    CHECK(cli::parse_group_spec("MC(2,3,1,3)") == GroupSpec::metacyclic(2, 3, 1, 3));
    CHECK(cli::parse_group_spec("EA(3,2)") == GroupSpec::elementary_abelian(3, 2));
    CHECK(cli::parse_group_spec("Q16") == GroupSpec::quaternion(16));
    CHECK(cli::parse_group_spec("Perm[(1,2,3);(1,2)]")
          == GroupSpec::permutations({{{1, 2, 3}}, {{1, 2}}}));
    for (const char* text : {"A5", "PSL(2,7)", "Heis(3)xEA(3,2)", "MC(3,2,1,4)", "D8xC2", "S4"})
        CHECK(cli::parse_group_spec(cli::parse_group_spec(text).canonical()).canonical() == cli::parse_group_spec(text).canonical());
}

TEST_CASE("group spec errors carry positions")
{
    CHECK(parse_error_at("A(5)") == 1);
    CHECK(parse_error_at("Z5") == 0);
    CHECK(parse_error_at("A5xB3") == 3);
    CHECK(parse_error_at("A5 junk") != std::string::npos);
    CHECK(parse_error_at("Q12") == 0);       // not a power of two
    CHECK(parse_error_at("C3xSL(2,6)") == 3); // 6 is not a prime power
    CHECK(parse_error_at("") == 0);
}

TEST_CASE("signature grammar")
{
    CHECK(cli::parse_signature("0;2,5,5") == Signature(0, {2, 5, 5}));
    CHECK(cli::parse_signature("(1; 5, 2)") == Signature(1, {2, 5}));
    CHECK(cli::parse_signature("2;-") == Signature(2, {}));
    CHECK_THROWS_AS(cli::parse_signature("0;1,2"), ParseError);
    CHECK_THROWS_AS(cli::parse_signature("-1;2"), ParseError);
    CHECK_THROWS_AS(cli::parse_signature("0;2,,3"), ParseError);
    CHECK_THROWS_AS(cli::parse_signature("x"), ParseError);
}

TEST_CASE("exit codes")
{
    using namespace aaslab::cli;
    CHECK(execute(command("aas-check", {"A5"})).exit_code == kOk);
    CHECK(execute(command("aas-check", {"SL(2,3)"})).exit_code == kNegative);
    CHECK(execute(command("aas-check", {"A(5)"})).exit_code == kError);
    CHECK(execute(command("sig-decide", {"A5", "0;2,5,5"})).exit_code == kOk);
    CHECK(execute(command("sig-decide", {"D4", "1;4"})).exit_code == kNegative);
    CHECK(execute(command("sig-decide", {"A5", "0;2,3,5"})).exit_code == kNegative);
    CHECK(execute(command("sig-decide", {"A5", "0;7"})).exit_code == kNegative);
    CHECK(execute(command("sig-potential", {"A5", "0;2,5,5"})).exit_code == kOk);
    CHECK(execute(command("sig-genus", {"A5", "0;5,5,5"})).exit_code == kOk);
    CHECK(execute(command("sig-nonsigs", {"D4"})).exit_code == kNegative);
    CHECK(execute(command("scan", {"heisenberg", "3,5"})).exit_code == kOk);
    CHECK(execute(command("product-check", {"Heis(3)", "C3"})).exit_code == kOk);
    CHECK(execute(command("product-check", {"Heis(3)", "C9"})).exit_code == kNegative);
    CHECK(execute(command("group-info", {})).exit_code == kError);
    CHECK(execute(command("no-such-command", {"A5"})).exit_code == kError);

    auto starved = command("sig-decide", {"PSL(2,7)", "3;7,7,7"});
    starved.options.budget = 1;
    starved.options.lattice_cap = 10;
    CHECK(execute(starved).exit_code == kUnknown);
}

TEST_CASE("report shape")
{
    const auto out = execute(command("sig-genus", {"A5", "0;5,5,5"}));
    const auto& r = out.report;
    CHECK(r["schema_version"] == 1);
    CHECK(r["command"]["name"] == "sig-genus");
    CHECK(r["group"]["order"] == 60);
    CHECK(r["payload"]["genus"] == "13");
    CHECK(r["exit_code"] == 0);
    CHECK(r["cache"]["enabled"] == false);
    CHECK_FALSE(r.contains("error"));

    const auto bad = execute(command("aas-check", {"A(5)"}));
    CHECK(bad.report["error"]["type"] == "parse");
    CHECK(bad.report["error"]["position"] == 1);
    CHECK(bad.report["payload"].is_null());
}

TEST_CASE("cache hits reproduce payloads")
{
    TempDir dir;
    auto cmd = command("sig-nonsigs", {"A5"});
    cmd.options.no_cache = false;
    cmd.options.cache_dir = dir.path.string();
    const auto cold = execute(cmd);
    const auto warm = execute(cmd);
    CHECK(cold.report["cache"]["bounds"] == "miss");
    CHECK(warm.report["cache"]["bounds"] == "hit");
    CHECK(warm.report["cache"]["lattice"] == "hit");
    CHECK(cold.report["payload"] == warm.report["payload"]);

    // a corrupted entry is ignored and recomputed
    for (const auto& e : std::filesystem::directory_iterator(dir.path)) {
        std::ofstream(e.path()) << "{\"schema_version\": 1, \"payload\": 17}";
    }
    const auto again = execute(cmd);
    CHECK(again.report["cache"]["bounds"] == "miss");
    CHECK(again.report["payload"] == cold.report["payload"]);
}

TEST_CASE("run writes JSON or text")
{
    std::ostringstream out, err;
    const char* json_argv[] = {"aaslab", "aas-check", "A5", "--json"};
    CHECK(cli::run(4, json_argv, out, err) == 0);
    CHECK(report::Json::parse(out.str())["payload"]["verdict"] == true);

    std::ostringstream text, terr;
    const char* text_argv[] = {"aaslab", "sig-genus", "A5", "0;5,5,5"};
    CHECK(cli::run(4, text_argv, text, terr) == 0);
    CHECK(text.str().find("13") != std::string::npos);

    std::ostringstream o3, e3;
    const char* bad_argv[] = {"aaslab", "aas-check", "A5", "--no-such-flag"};
    CHECK(cli::run(4, bad_argv, o3, e3) == 2);
}

} // TEST_SUITE

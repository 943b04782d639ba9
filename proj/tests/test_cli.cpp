#include "cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qdiamond;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("expand")
{
    auto r = run({"expand", "--eta", "2^2 1^-7", "--order", "6"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out == "0\t1\n1\t7\n2\t33\n3\t126\n4\t419\n5\t1260\n");
    auto m = run({"expand", "--eta", "1^1", "--order", "3", "--mod", "5"});
    CHECK(m.out == "0\t1\n1\t4\n2\t4\n");
}

TEST_CASE("verification verbs")
{
    auto ok = run({"verify", "--k", "2", "--A", "11", "--B", "7", "--mod", "11", "--bound", "20000"});
    CHECK(ok.code == cli::exit_ok);
    CHECK(ok.out.find("holds up to bound 20000") != std::string::npos);

    auto bad = run({"verify", "--k", "1", "--A", "2", "--B", "0", "--mod", "2", "--bound", "100"});
    CHECK(bad.code == cli::exit_failed);
    CHECK(bad.out.find("FAILS at n=0") != std::string::npos);

    auto lemmas = run({"verify-lemma", "--id", "all", "--order", "2000"});
    CHECK(lemmas.code == cli::exit_ok);
    std::size_t passes = 0;
    for (std::size_t at = 0; (at = lemmas.out.find("PASS\t", at)) != std::string::npos; ++at)
        ++passes;
    CHECK(passes == 11);
    CHECK(run({"verify-lemma", "--id", "sextic", "--order", "100"}).code == cli::exit_ok);

    CHECK(run({"families", "--p", "13", "--kind", "pm2", "--bound", "3000"}).code == cli::exit_ok);
    CHECK(run({"families", "--p", "7", "--kind", "ramanujan", "--j", "2", "--bound", "3000"}).code
          == cli::exit_ok);
    CHECK(run({"families", "--p", "11", "--kind", "d7", "--bound", "3000"}).code == cli::exit_ok);
    CHECK(run({"smoot", "--alpha-max", "3", "--bound", "5000"}).code == cli::exit_ok);
    CHECK(run({"catalog", "--bound", "2000", "--j-max", "0"}).code == cli::exit_ok);
}

TEST_CASE("scan writes jsonl")
{
    const auto path = std::filesystem::temp_directory_path() / "qdiamond_cli_scan.jsonl";
    auto r = run({"scan", "--k", "2", "--A-max", "11", "--mods", "3,11", "--bound", "5000", "--out",
                  path.string()});
    CHECK(r.code == cli::exit_ok);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find(R"({"k":2,"A":11,"B":7,"M":11,"bound":5000,"family":"scan","status":"holds_up_to_bound"})")
          != std::string::npos);
    std::filesystem::remove(path);

    auto to_stdout = run({"scan", "--k", "2", "--A-max", "3", "--mods", "3", "--bound", "500"});
    CHECK(to_stdout.code == cli::exit_ok);
    CHECK(to_stdout.out.find(R"("A":3,"B":2,"M":3)") != std::string::npos);
}

TEST_CASE("usage errors")
{
    const std::vector<std::vector<std::string>> corpus = {
        {},
        {"frobnicate"},
        {"expand", "--order", "5"},
        {"expand", "--eta", "2^x", "--order", "5"},
        {"expand", "--eta", "1^1", "--order", "0"},
        {"expand", "--eta", "1^1", "--order", "5", "--mod", "1"},
        {"verify-lemma", "--id", "nope"},
        {"verify", "--k", "2", "--A", "3", "--B", "3", "--mod", "3", "--bound", "100"},
        {"verify", "--k", "2", "--A", "3", "--B", "2", "--mod", "3", "--bound", "2"},
        {"verify", "--k", "0", "--A", "3", "--B", "2", "--mod", "3", "--bound", "100"},
        {"verify", "--k", "2", "--A", "3"},
        {"families", "--p", "9", "--kind", "pm2"},
        {"families", "--p", "13", "--kind", "ramanujan"},
        {"families", "--p", "5", "--kind", "other"},
        {"smoot", "--alpha-max", "0"},
        {"scan", "--k", "2", "--A-max", "20", "--mods", "3", "--bound", "100"},
        {"scan", "--k", "2,x", "--A-max", "2", "--mods", "3", "--bound", "100"},
        {"scan", "--k", "2", "--A-max", "2", "--mods", "1", "--bound", "100"},
        {"bench", "--order", "0"},
        {"verify", "--k", "2", "--A", "3", "--B", "2", "--mod", "3", "--bound", "100", "--extra"},
    };
    for (const auto& args : corpus) {
        std::string joined;
        for (const auto& a : args)
            joined += a + ' ';
        CAPTURE(joined);
        auto r = run(args);
        CHECK(r.code == cli::exit_usage);
        CHECK(r.out.empty());
    }
    CHECK(run({"--help"}).code == cli::exit_ok);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::vector<std::string>> corpus = {
        {"catalog", "--bound", "3000", "--j-max", "1", "--threads", "4"},
        {"scan", "--k", "1,2,7", "--A-max", "8", "--mods", "2,3,4,8", "--bound", "2000", "--threads", "3"},
        {"expand", "--eta", "1^-40", "--order", "50", "--mod", "1000003"},
    };
    for (const auto& args : corpus) {
        auto a = run(args);
        auto b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    auto single = run({"catalog", "--bound", "3000", "--j-max", "1", "--threads", "1"});
    CHECK(single.out == run({"catalog", "--bound", "3000", "--j-max", "1", "--threads", "4"}).out);
}

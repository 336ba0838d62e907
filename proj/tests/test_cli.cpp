#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lch/cli.hpp"
#include "support.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace lchtest;

namespace {

struct Out {
    int code;
    std::string out, err;
};

Out lch_run(std::vector<std::string> args)
{
    std::ostringstream o, e;
    int c = lch::run(args, o, e);
    return {c, o.str(), e.str()};
}

bool has(const std::string& s, const std::string& t) { return s.find(t) != std::string::npos; }

}  // namespace

TEST_CASE("unknot differential")
{
    auto r = lch_run({"dga", corpus("unknot.lch"), "--check-d2"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "d = 0"));
    CHECK(has(r.out, "d^2=0 pass"));
}

TEST_CASE("Hopf augmentations include zero")
{
    auto r = lch_run({"augmentations", corpus("lambda2.lch"), "--count"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "count 3"));
    CHECK(has(r.out, "b1=0,b2=0\n"));
    CHECK_FALSE(has(r.out, "b1=1,b2=1"));
}

TEST_CASE("trefoil census has five rows")
{
    auto r = lch_run({"torus", "--n", "3", "--census"});
    CHECK(r.code == 0);
    int rows = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);)
        rows += !line.empty() && line[0] == '(';
    CHECK(rows == 5);
    CHECK(has(r.out, "(2,1,3) (0,1,1) 1"));
}

TEST_CASE("json reports are versioned and parse")
{
    std::vector<std::vector<std::string>> cmds{
        {"validate", corpus("lambda3.lch"), "--json"},
        {"dga", corpus("lambda3.lch"), "--check-d2", "--check-degree", "--json"},
        {"augmentations", corpus("lambda3.lch"), "--json"},
        {"linearized", corpus("lambda3.lch"), "--json"},
        {"cobordism", corpus("lambda3.lch"), "--steps", corpus("lambda3_fill_213.json"), "--verify", "--json"},
        {"torus", "--n", "4", "--census", "--json"},
        {"torus", "--n", "5", "--catalan", "--json"},
    };
    for (const auto& c : cmds) {
        auto r = lch_run(c);
        CAPTURE(c[0]);
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["schema"] == "lch/1");
        CHECK(j["command"] == c[0]);
        CHECK(j.contains("inputs"));
    }
    auto j = nlohmann::json::parse(lch_run({"augmentations", corpus("lambda3.lch"), "--json"}).out);
    CHECK(j["count"] == 5);
}

TEST_CASE("identical inputs give identical bytes")
{
    std::vector<std::vector<std::string>> cmds{
        {"dga", corpus("lambda5.lch")},
        {"augmentations", corpus("lambda5.lch")},
        {"linearized", corpus("lambda4.lch")},
        {"torus", "--n", "5", "--census", "--json"},
        {"cobordism", corpus("lambda4.lch"), "--steps", corpus("lambda4_fill_2143.json")},
    };
    for (const auto& c : cmds) {
        auto a = lch_run(c), b = lch_run(c);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
    CHECK(lch_run({"linearized", corpus("lambda4.lch")}).out ==
          lch_run({"linearized", corpus("lambda4.lch"), "--serial"}).out);
}

TEST_CASE("exit codes")
{
    CHECK(lch_run({}).code == 2);
    CHECK(lch_run({"frobnicate"}).code == 2);
    CHECK(lch_run({"dga", corpus("unknot.lch"), "--no-such-flag"}).code == 2);
    CHECK(lch_run({"dga", corpus("no_such_file.lch")}).code == 2);
    CHECK(lch_run({"torus", "--n", "3"}).code == 2);
    CHECK(lch_run({"torus", "--n", "3", "--census", "--catalan"}).code == 2);
    CHECK(lch_run({"dga", corpus("lambda3.lch"), "--check-filtration"}).code == 0);
    CHECK(lch_run({"augmentations", corpus("lambda2.lch"), "--aug", "b1=0,b2=1"}).code == 0);
    auto bad = lch_run({"augmentations", corpus("lambda2.lch"), "--aug", "b1=1,b2=1"});
    CHECK(bad.code == 1);
    CHECK(lch_run({"augmentations", corpus("lambda2.lch"), "--aug", "zz=1"}).code == 2);
    CHECK(lch_run({"linearized", corpus("lambda2.lch"), "--aug", "b1=1,b2=1"}).code == 1);
    CHECK(lch_run({"dga", "--help"}).code == 0);
}

TEST_CASE("malformed inputs are usage errors")
{
    std::string p = "lch_cli_test_bad.lch";
    {
        std::ofstream f(p);
        f << "this is not a diagram\n";
    }
    auto r = lch_run({"dga", p});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    std::string s = "lch_cli_test_bad.json";
    {
        std::ofstream f(s);
        f << "{\"steps\":[{\"kind\":\"twist\"}]}";
    }
    CHECK(lch_run({"cobordism", corpus("lambda3.lch"), "--steps", s}).code == 2);
    std::remove(p.c_str());
    std::remove(s.c_str());
}

TEST_CASE("a broken step is an invariant failure")
{
    std::string s = "lch_cli_test_step.json";
    {
        std::ofstream f(s);
        // b1 on the trefoil is not contractible without new areas
        f << "{\"steps\":[{\"kind\":\"saddle\",\"chords\":[\"a1\"]}]}";
    }
    CHECK(lch_run({"cobordism", corpus("lambda3.lch"), "--steps", s}).code == 1);
    std::remove(s.c_str());
}

TEST_CASE("pullback from the command line")
{
    auto r = lch_run({"cobordism", corpus("lambda3.lch"), "--steps", corpus("lambda3_fill_213.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "filling chi -1 genus 1 augmentation b1=0,b2=1,b3=1"));
}

TEST_CASE("matrix query")
{
    CHECK(has(lch_run({"torus", "--n", "3", "--matrix", "b1=1,b2=1,b3=1"}).out, "matrix augmentation"));
    CHECK(has(lch_run({"torus", "--n", "2", "--matrix", "b1=1,b2=1"}).out, "not an augmentation"));
}

#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "qfoulkes/cli.hpp"

using namespace qfoulkes;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "qfoulkes");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("foulkes subcommand")
{
    const Run r = run_cli({"--no-cache", "foulkes", "--a", "2", "--b", "3", "--q"});
    CHECK(r.code == exit_verified);
    CHECK(contains(r.out, "(1 + q + q^2 + q^3)*s[2,2,2]"));
    CHECK(contains(r.out, "(q^3 + q^4 + q^5 + q^6)*s[1,1,1,1,1,1]"));

    const Run c = run_cli({"--no-cache", "foulkes", "--a", "2", "--b", "3", "--q0"});
    CHECK(c.code == exit_verified);
    CHECK(contains(c.out, "= s[2,2,2]\n"));

    const Run one = run_cli({"--no-cache", "foulkes", "--a", "2", "--b", "3", "--q1"});
    CHECK(contains(one.out, "4*e2^3"));
    CHECK(contains(one.out, "closed form: agrees"));
}

TEST_CASE("configs subcommand")
{
    const Run r = run_cli({"--no-cache", "configs", "--n", "7"});
    CHECK(r.code == exit_verified);
    CHECK(contains(r.out, "n=7: 0 Foulkes configurations"));
    const Run t = run_cli({"--no-cache", "--verdict-only", "configs", "--n", "10", "--check-table"});
    CHECK(t.code == exit_verified);
    const Run neg = run_cli(
        {"--no-cache", "configs", "--alpha", "[2]", "--beta", "[6,3,3]", "--gamma", "[3]", "--delta", "[4,2,2]"});
    CHECK(neg.code == exit_negative);
    CHECK(contains(neg.out, "witness: s[11,7,3,3]"));
    const Run no_entry = run_cli({"--no-cache", "configs", "--n", "17", "--check-table"});
    CHECK(no_entry.code == exit_error);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run_cli({}).code == exit_error);
    CHECK(run_cli({"--no-cache", "bogus"}).code == exit_error);
    CHECK(run_cli({"--no-cache", "foulkes", "--a", "2"}).code == exit_error);
    CHECK(run_cli({"--no-cache", "foulkes", "--a", "2", "--b", "3", "--q", "--q1"}).code == exit_error);
    CHECK(run_cli({"--no-cache", "--jobs", "0", "foulkes", "--a", "2", "--b", "3"}).code == exit_error);
    CHECK(run_cli({"--no-cache", "--emit", "xml", "foulkes", "--a", "2", "--b", "3"}).code == exit_error);
    CHECK(run_cli({"--no-cache", "kostka", "--lambda", "[1,2]", "--mu", "[3]"}).code == exit_error);
    CHECK(run_cli({"--no-cache", "suite", "nonsense"}).code == exit_error);
    CHECK(run_cli({"--no-cache", "manivel", "--a", "3", "--b", "3"}).code == exit_error);
    const Run cap = run_cli({"--no-cache", "--degree-cap", "10", "foulkes", "--a", "3", "--b", "4"});
    CHECK(cap.code == exit_error);
    CHECK(contains(cap.err, "degree-cap"));
    CHECK(run_cli({"--help"}).code == exit_verified);
}

TEST_CASE("other subcommands run")
{
    CHECK(run_cli({"--no-cache", "kostka", "--lambda", "[2,1]", "--mu", "[1,1,1]"}).out ==
          "K_{[2,1],[1,1,1]}(q) = q + q^2   (at q=1: 2)\n");
    CHECK(run_cli({"--no-cache", "dims", "--a", "2", "--b", "3"}).code == exit_verified);
    CHECK(run_cli({"--no-cache", "q1-forms", "--a", "3", "--b", "4"}).code == exit_verified);
    CHECK(run_cli({"--no-cache", "stability", "--a", "2", "--b", "3"}).code == exit_verified);
    CHECK(run_cli({"--no-cache", "theta", "--a", "2", "--b", "5"}).code == exit_verified);
    CHECK(run_cli({"--no-cache", "generalized", "--a", "2", "--b", "6", "--c", "3", "--d", "4", "--q1"}).code ==
          exit_verified);
    CHECK(run_cli({"--no-cache", "iterated", "--seq", "3,2"}).code == exit_verified);
    CHECK(run_cli({"--no-cache", "check35", "--a", "2", "--b", "3"}).code == exit_verified);
    CHECK(run_cli({"--no-cache", "configs", "--n", "12", "--conj4"}).code == exit_verified);
    CHECK(run_cli({"--no-cache", "suite", "properties"}).code == exit_verified);
}

TEST_CASE("JSON output is deterministic without timing")
{
    const std::vector<std::string> args{"--no-cache", "--emit", "json", "--no-timing", "foulkes", "--a", "2", "--b", "4"};
    const Run a = run_cli(args);
    const Run b = run_cli(args);
    CHECK(a.code == exit_verified);
    CHECK(a.out == b.out);
    CHECK_FALSE(contains(a.out, "\"ms\""));
    CHECK(contains(run_cli({"--no-cache", "--emit", "json", "foulkes", "--a", "2", "--b", "4"}).out, "\"ms\""));
}

TEST_CASE("cache never changes results")
{
    const auto path = std::filesystem::temp_directory_path() / "qfoulkes-tests" / "cli.cache";
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::remove(path);
    const std::vector<std::string> args{"--cache", path.string(), "--emit", "json", "--no-timing",
                                        "configs", "--n", "8", "--q"};
    const Run cold = run_cli(args);
    CHECK(std::filesystem::exists(path));
    const Run warm = run_cli(args);
    CHECK(cold.out == warm.out);
    CHECK(warm.err.empty());
    const Run nocache = run_cli({"--no-cache", "--emit", "json", "--no-timing", "configs", "--n", "8", "--q"});
    CHECK(nocache.out == cold.out);
}

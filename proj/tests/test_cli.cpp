#include "gapcomp/cli.hpp"
#include "gapcomp/genfun.hpp"
#include "gapcomp/io.hpp"
#include "gapcomp/sequences.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace gapcomp;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "gapcomp");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& name, const std::string& contents)
        : path_(std::filesystem::temp_directory_path() / ("gapcomp_test_" + std::to_string(::getpid()) + "_" + name))
    {
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

} // namespace

TEST_CASE("count")
{
    CHECK(run({"count", "compositions", "--n", "4", "--g", "2"}).out == "7\n");
    CHECK(run({"count", "compositions", "--n", "10", "--g", "1"}).out == "42\n");
    CHECK(run({"count", "partitions", "--n", "0", "--g", "5", "--s", "3"}).out == "1\n");
    auto listed = run({"count", "partitions", "--n", "4", "--g", "2", "--list"});
    CHECK(listed.code == 0);
    CHECK(listed.out == "(1,3)\n(4)\n");
}

TEST_CASE("series at x = 1")
{
    auto r = run({"series", "C", "--g", "2", "--s", "1", "--N", "6", "--at-x", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 1 2 4 7 13 23\n");
}

TEST_CASE("oeis b-file bytes")
{
    auto r = run({"oeis", "compositions", "--g", "2", "--count", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1\n1 1\n2 2\n3 4\n4 7\n5 13\n6 23\n");
    auto shifted = run({"oeis", "compositions", "--g", "2", "--count", "2", "--offset", "5"});
    CHECK(shifted.out == "5 13\n6 23\n");
    auto parsed = parse_bfile(r.out);
    REQUIRE(parsed.size() == 7);
    CHECK(parsed[6] == std::pair<long, Integer>{6, 23});
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"matrix", "gamma", "--g", "3", "--s", "2", "--dim", "15", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> series{"series", "Cge", "--g", "1", "--m", "2", "--N", "12", "--format", "json"};
    CHECK(run(series).out == run(series).out);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({"oeis", "nope"}).code == cli::kUsage);
    CHECK(run({"count", "partitions", "--n", "4", "--g", "2", "--min-first", "2"}).code == cli::kUsage);
    CHECK(run({"count", "partitions", "--n", "4", "--g", "2", "--min-first", "2"}).err.find("--min-first") !=
          std::string::npos);
    CHECK(run({"matrix", "mu", "--g", "0", "--dim", "4"}).code == cli::kUsage);
    CHECK(run({"series", "Ple", "--g", "1", "--N", "4"}).code == cli::kUsage);
    CHECK(run({"series", "P", "--g", "1", "--N", "4", "--format", "bfile"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"count", "partitions", "--n", "x", "--g", "1"}).code == cli::kUsage);
    CHECK(run({"verify", "inverse", "--from-file", "/nonexistent/file.json"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("verify suites pass")
{
    for (const char* suite : {"inverse", "kidentity", "gm", "euler", "involution"}) {
        auto r = run({"verify", suite});
        CAPTURE(suite);
        CHECK(r.code == cli::kOk);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(r.out.find("summary:") != std::string::npos);
    }
}

TEST_CASE("inverse from file round trip and corruption")
{
    auto exported = run({"matrix", "mu", "--g", "2", "--s", "1", "--dim", "12", "--format", "json"});
    REQUIRE(exported.code == 0);
    TempFile good("mu.json", exported.out);
    CHECK(run({"verify", "inverse", "--from-file", good.path()}).code == cli::kOk);

    auto j = nlohmann::json::parse(exported.out);
    j["entries"][8][3] = 5;
    TempFile bad("mu_bad.json", j.dump());
    auto r = run({"verify", "inverse", "--from-file", bad.path()});
    CHECK(r.code == cli::kIdentityViolated);
    CHECK(r.out.find("mu entry (9,4)") != std::string::npos);

    auto csv = run({"matrix", "gamma", "--g", "2", "--dim", "10", "--format", "csv"});
    TempFile good_csv("gamma.csv", csv.out);
    CHECK(run({"verify", "inverse", "--from-file", good_csv.path(), "--kind", "gamma", "--g", "2"}).code == cli::kOk);
    CHECK(run({"verify", "inverse", "--from-file", good_csv.path()}).code == cli::kUsage);
}

TEST_CASE("kidentity from file")
{
    auto terms = count_m_step_row(20, 3, GapClass(2, 1));
    TempFile good("k.b", to_bfile(terms, 0));
    CHECK(run({"verify", "kidentity", "--from-file", good.path(), "--g", "2", "--m", "3"}).code == cli::kOk);
    terms[11] -= 1;
    TempFile bad("k_bad.b", to_bfile(terms, 0));
    auto r = run({"verify", "kidentity", "--from-file", bad.path(), "--g", "2", "--m", "3"});
    CHECK(r.code == cli::kIdentityViolated);
    CHECK(r.out.find("q^11") != std::string::npos);
}

TEST_CASE("gm from file")
{
    auto exported = run({"series", "Cge", "--g", "2", "--m", "2", "--N", "12", "--L", "5", "--format", "json"});
    REQUIRE(exported.code == 0);
    TempFile good("c.json", exported.out);
    CHECK(run({"verify", "gm", "--from-file", good.path()}).code == cli::kOk);
    auto j = nlohmann::json::parse(exported.out);
    j["layers"][3][10] = 1000;
    TempFile bad("c_bad.json", j.dump());
    auto r = run({"verify", "gm", "--from-file", bad.path()});
    CHECK(r.code == cli::kIdentityViolated);
    CHECK(r.out.find("x^3 q^10") != std::string::npos);
}

TEST_CASE("euler from file")
{
    auto exported = run({"series", "Ple", "--g", "1", "--m", "4", "--N", "15", "--at-x", "-1", "--format", "json"});
    REQUIRE(exported.code == 0);
    TempFile good("e.json", exported.out);
    CHECK(run({"verify", "euler", "--from-file", good.path()}).code == cli::kOk);
    auto j = nlohmann::json::parse(exported.out);
    j["coefficients"][6] = 3;
    TempFile bad("e_bad.json", j.dump());
    auto r = run({"verify", "euler", "--from-file", bad.path()});
    CHECK(r.code == cli::kIdentityViolated);
    CHECK(r.out.find("q^6") != std::string::npos);
}

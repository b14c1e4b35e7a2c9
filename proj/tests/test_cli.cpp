#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "support/temp_files.hpp"

namespace fs = std::filesystem;
using Catch::Matchers::ContainsSubstring;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

CliResult run_cli(const std::string& args, const fs::path& scratch) {
    const fs::path capture = scratch / "cli_output.txt";
    const std::string command = std::string(SENSECLUST_CLI) + " " + args + " > " +
                                capture.string() + " 2>&1";
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    result.output = testutil::read_file(capture);
    return result;
}

std::string fixture_args() {
    const std::string data = SENSECLUST_DATA_DIR;
    return "--query apple --corpus " + data + "/corpus/manifest.tsv" +
           " --dictionary " + data + "/dictionary.tsv" +
           " --stopwords " + data + "/stopwords.txt" +
           " --lexicon " + data + "/nouns.txt";
}

} // namespace

TEST_CASE("cluster subcommand writes a report and exits 0") {
    const auto dir = testutil::scratch_dir("cli_cluster");
    const auto out = dir / "out";
    const CliResult r =
        run_cli("cluster " + fixture_args() + " --out " + out.string(), dir);
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);
    REQUIRE(fs::exists(out / "report.tsv"));
    CHECK_THAT(r.output, ContainsSubstring("computer: D1 D3"));
    CHECK_THAT(r.output, ContainsSubstring("fruit: D2 D4"));

    const std::string report = testutil::read_file(out / "report.tsv");
    CHECK_THAT(report, ContainsSubstring("#query\tapple"));
    CHECK_THAT(report, ContainsSubstring("D3\tcomputer\t0.75593"));
}

TEST_CASE("cluster --dump writes the intermediate files") {
    const auto dir = testutil::scratch_dir("cli_dump");
    const auto out = dir / "out";
    const CliResult r = run_cli(
        "cluster " + fixture_args() + " --dump --out " + out.string(), dir);
    REQUIRE(r.exit_code == 0);
    for (const char* name : {"report.tsv", "preprocessed.tsv", "index.tsv",
                             "communities.tsv", "doc_vectors.tsv",
                             "community_vectors.tsv"}) {
        CAPTURE(name);
        CHECK(fs::exists(out / name));
    }
    const std::string preprocessed = testutil::read_file(out / "preprocessed.tsv");
    CHECK_THAT(preprocessed, ContainsSubstring(
        "D1\tapple computer keyboard apple tree country\n"));
    const std::string communities = testutil::read_file(out / "communities.tsv");
    CHECK(communities ==
          "computer\tcomputer:1,keyboard:1,mouse:2,monitor:1\n"
          "fruit\tfruit:1,tree:3,vegetable:1,juice:1\n");
}

TEST_CASE("cluster --top-n truncates the corpus") {
    const auto dir = testutil::scratch_dir("cli_topn");
    const auto out = dir / "out";
    const CliResult r = run_cli(
        "cluster " + fixture_args() + " --top-n 3 --dump --out " + out.string(), dir);
    REQUIRE(r.exit_code == 0);
    const std::string preprocessed = testutil::read_file(out / "preprocessed.tsv");
    CHECK_THAT(preprocessed, ContainsSubstring("D3"));
    CHECK_THAT(preprocessed, !ContainsSubstring("D4"));
}

TEST_CASE("missing inputs are usage errors: exit 2, nothing written") {
    const auto dir = testutil::scratch_dir("cli_usage");
    const auto out = dir / "out";
    const std::string data = SENSECLUST_DATA_DIR;

    SECTION("no such manifest") {
        const CliResult r = run_cli(
            "cluster --query apple --corpus " + (dir / "nope.tsv").string() +
                " --dictionary " + data + "/dictionary.tsv" +
                " --stopwords " + data + "/stopwords.txt" +
                " --lexicon " + data + "/nouns.txt" +
                " --out " + out.string(),
            dir);
        CHECK(r.exit_code == 2);
        CHECK(!fs::exists(out));
    }
    SECTION("missing required flag") {
        const CliResult r = run_cli("cluster --query apple", dir);
        CHECK(r.exit_code == 2);
    }
    SECTION("no subcommand") {
        CHECK(run_cli("", dir).exit_code == 2);
    }
}

TEST_CASE("data problems exit 3") {
    const auto dir = testutil::scratch_dir("cli_data");
    const auto out = dir / "out";

    SECTION("query absent from the dictionary") {
        const std::string args = fixture_args();
        const std::string swapped =
            "--query zebra" + args.substr(std::string("--query apple").size());
        const CliResult r = run_cli("cluster " + swapped + " --out " + out.string(), dir);
        CHECK(r.exit_code == 3);
        CHECK_THAT(r.output, ContainsSubstring("zebra"));
        CHECK(!fs::exists(out / "report.tsv"));
    }
    SECTION("no sense present in the corpus") {
        const std::string args = fixture_args();
        const std::string swapped =
            "--query java" + args.substr(std::string("--query apple").size());
        const CliResult r = run_cli("cluster " + swapped + " --out " + out.string(), dir);
        CHECK(r.exit_code == 3);
    }
}

TEST_CASE("explain prints the shared-term contributions") {
    const auto dir = testutil::scratch_dir("cli_explain");

    SECTION("document with contributions") {
        const CliResult r = run_cli("explain D3 " + fixture_args(), dir);
        CAPTURE(r.output);
        REQUIRE(r.exit_code == 0);
        CHECK_THAT(r.output, ContainsSubstring("community computer: similarity 0.75593"));
        CHECK_THAT(r.output,
                   ContainsSubstring("mouse: 0.30103 x 0.30103 = 0.09062"));
        CHECK_THAT(r.output, ContainsSubstring("community fruit: similarity 0.00000"));
        CHECK_THAT(r.output, ContainsSubstring("(no shared terms)"));
    }
    SECTION("unknown doc id exits 3 and names it") {
        const CliResult r = run_cli("explain D9 " + fixture_args(), dir);
        CHECK(r.exit_code == 3);
        CHECK_THAT(r.output, ContainsSubstring("D9"));
    }
}

TEST_CASE("a document sharing nothing with any community stays unclustered") {
    const auto dir = testutil::scratch_dir("cli_unclustered");
    // fixture corpus plus one page about neither sense
    const std::string data = SENSECLUST_DATA_DIR;
    for (const char* name : {"d1.txt", "d2.txt", "d3.txt", "d4.txt"}) {
        testutil::write_file(dir, name,
                             testutil::read_file(fs::path(data) / "corpus" / name));
    }
    testutil::write_file(dir, "d5.txt", "the country is very nice.\n");
    testutil::write_file(dir, "manifest.tsv",
                         "D1\td1.txt\nD2\td2.txt\nD3\td3.txt\nD4\td4.txt\nD5\td5.txt\n");

    const std::string args = "--query apple --corpus " +
                             (dir / "manifest.tsv").string() + " --dictionary " +
                             data + "/dictionary.tsv --stopwords " + data +
                             "/stopwords.txt --lexicon " + data + "/nouns.txt";
    const auto out = dir / "out";
    const CliResult r = run_cli("cluster " + args + " --out " + out.string(), dir);
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);
    CHECK_THAT(r.output, ContainsSubstring("unclustered: D5"));
    const std::string report = testutil::read_file(out / "report.tsv");
    CHECK_THAT(report, ContainsSubstring("D5\t-\t0.00000\t0.00000,0.00000"));
    // assignments of the original four documents are unchanged
    CHECK_THAT(report, ContainsSubstring("D1\tcomputer\t"));
    CHECK_THAT(report, ContainsSubstring("D2\tfruit\t"));

    SECTION("explain shows empty contribution lists for it") {
        const CliResult e = run_cli("explain D5 " + args, dir);
        REQUIRE(e.exit_code == 0);
        CHECK_THAT(e.output, ContainsSubstring("community computer: similarity 0.00000"));
        CHECK_THAT(e.output, ContainsSubstring("community fruit: similarity 0.00000"));
        const auto first = e.output.find("(no shared terms)");
        REQUIRE(first != std::string::npos);
        CHECK(e.output.find("(no shared terms)", first + 1) != std::string::npos);
    }
}

TEST_CASE("two identical runs produce byte-identical outputs") {
    const auto dir = testutil::scratch_dir("cli_determinism");
    const auto out_a = dir / "a";
    const auto out_b = dir / "b";
    REQUIRE(run_cli("cluster " + fixture_args() + " --dump --out " + out_a.string(),
                    dir).exit_code == 0);
    REQUIRE(run_cli("cluster " + fixture_args() + " --dump --out " + out_b.string(),
                    dir).exit_code == 0);
    for (const auto& entry : fs::directory_iterator(out_a)) {
        const auto name = entry.path().filename();
        CAPTURE(name);
        CHECK(testutil::read_file(entry.path()) ==
              testutil::read_file(out_b / name));
    }
}

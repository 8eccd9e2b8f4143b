#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "quandle/cli.hpp"
#include "quandle/constructions.hpp"
#include "quandle/io.hpp"

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = quandle::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json report(const std::vector<std::string>& args) {
    auto r = run(args);
    auto j = json::parse(r.out);
    REQUIRE(j.contains("wall_clock_seconds"));
    j.erase("wall_clock_seconds");
    return j;
}

json golden(const std::string& name) {
    std::ifstream f(std::string(QUANDLE_GOLDEN_DIR) + "/" + name);
    REQUIRE(f.good());
    return json::parse(f);
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("quandle-cli-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("info text") {
        auto r = run({"info", "dihedral:3"});
        CHECK(r.code == 0);
        CHECK(r.out == "order=3\nquandle=true\ntype=2\nconnected=true\nmedial=true\nfaithful=true\n"
                       "inn_order=6\ninn_exponent=6\ninner_image_order=3\ninner_image_type=2\n");
    }

    TEST_CASE("golden JSON reports") {
        CHECK(report({"--json", "info", "dihedral:3"}) == golden("info_dihedral3.json"));
        CHECK(report({"--json", "cycle", "dihedral:3", "--word", "aa", "--x", "1", "--y", "2"}) ==
              golden("cycle_dihedral3_aa.json"));
        CHECK(report({"--json", "scan", "dihedral:3", "alexander:5:2", "--word", "abab", "--word", "aa"}) ==
              golden("scan_abab_aa.json"));
    }

    TEST_CASE("report envelope") {
        auto j = report({"--json", "info", "alexander:5:2"});
        CHECK(j["schema"] == "quandle-report");
        CHECK(j["schema_version"] == quandle::cli::schema_version);
        CHECK(j["tool_version"] == quandle::cli::tool_version);
        CHECK(j["status"] == "pass");
        CHECK(j["inputs"][0]["digest"] == quandle::digest(quandle::emit(quandle::make("alexander:5:2"))));
        CHECK(j["results"]["type"] == 4);
    }

    TEST_CASE("exit codes") {
        CHECK(run({"info", "dihedral:3"}).code == quandle::cli::pass);
        CHECK(run({"cycle", "dihedral:3", "--word", "aaa", "--x", "1", "--y", "2"}).code ==
              quandle::cli::check_failed);
        CHECK(run({"info"}).code == quandle::cli::usage_error);
        CHECK(run({"frobnicate"}).code == quandle::cli::usage_error);
        CHECK(run({"info", "nosuch:3"}).code == quandle::cli::usage_error);
        CHECK(run({"info", "/no/such/file.txt"}).code == quandle::cli::usage_error);
        CHECK(run({"reproduce", "census"}).code == quandle::cli::usage_error);
        auto j = report({"--json", "reproduce", "census"});
        CHECK(j["status"] == "error");
        CHECK(j["error"]["type"] == "MissingDataset");
    }

    TEST_CASE("validate reports violations") {
        auto dir = scratch_dir("validate");
        std::ofstream(dir / "bad.txt") << "2\n1 1\n1 1\n";
        auto r = run({"--json", "validate", (dir / "bad.txt").string()});
        CHECK(r.code == quandle::cli::check_failed);
        auto j = json::parse(r.out);
        CHECK(j["results"]["is_rack"] == false);
        std::ofstream(dir / "short.txt") << "2\n1 1\n1\n";
        CHECK(run({"validate", (dir / "short.txt").string()}).code == quandle::cli::usage_error);
    }

    TEST_CASE("gen writes a loadable file") {
        auto dir = scratch_dir("gen");
        auto path = (dir / "d5.txt").string();
        CHECK(run({"gen", "dihedral:5", "--out", path}).code == 0);
        auto X = quandle::load(path);
        CHECK(quandle::emit(X) == quandle::emit(quandle::dihedral(5)));
        auto r = run({"info", path});
        CHECK(r.code == 0);
        CHECK(r.out.find("order=5\n") == 0);
    }

    TEST_CASE("homology and cocycles") {
        auto j = report({"--json", "homology", "dihedral:3", "--complex", "rack", "--max-degree", "2"});
        CHECK(j["status"] == "pass");
        CHECK(j["results"]["homology"][0]["text"] == "Z");
        auto c = report({"--json", "cocycles", "trivial:2", "--mod", "2"});
        CHECK(c["status"] == "pass");
        CHECK(run({"cocycles", "dihedral:3"}).code == quandle::cli::usage_error);
    }

    TEST_CASE("dataset fixture") {
        auto dir = scratch_dir("dataset");
        std::ofstream(dir / "q_3_1.txt") << quandle::emit(quandle::dihedral(3));
        std::ofstream(dir / "q_5_1.txt") << quandle::emit(quandle::dihedral(5));
        std::ofstream(dir / "q_5_2.txt") << quandle::emit(quandle::alexander_zn(5, 2));
        auto j = report({"--json", "--dataset", dir.string(), "reproduce", "types"});
        REQUIRE(j["status"] != "error");
        auto text = run({"--dataset", dir.string(), "reproduce", "types"});
        CHECK(text.out.find("got [2, 2] [4, 1],") != std::string::npos);
    }
}

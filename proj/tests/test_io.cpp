#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "quandle/constructions.hpp"
#include "quandle/io.hpp"

using namespace quandle;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "quandle-io-test";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

bool same_table(const QuandleTable& a, const QuandleTable& b) {
    if (a.order() != b.order()) return false;
    for (Element x = 0; x < static_cast<Element>(a.order()); ++x)
        for (Element y = 0; y < static_cast<Element>(a.order()); ++y)
            if (a.op(x, y) != b.op(x, y)) return false;
    return true;
}

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("parsing a right-convention matrix") {
        auto X = parse_quandle("3\n1 3 2\n3 2 1\n2 1 3\n");
        CHECK(same_table(X, dihedral(3)));
        CHECK(parse_matrix("2\n\n1 1\n  2 2  \n\n") == RawTable{{0, 0}, {1, 1}});
    }

    TEST_CASE("left convention transposes") {
        // x*y = x + 1 stored left-handed: row y column x
        const std::string text = "3\n2 3 1\n2 3 1\n2 3 1\n";
        auto right = parse_matrix(text, Convention::right);
        auto left = parse_matrix(text, Convention::left);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(left[i][j] == right[j][i]);
        auto X = parse_quandle(text, Convention::left, Mode::rack);
        for (Element x = 0; x < 3; ++x)
            for (Element y = 0; y < 3; ++y) CHECK(X.op(x, y) == (x + 1) % 3);
    }

    TEST_CASE("parse errors carry positions") {
        try {
            parse_matrix("3\n1 3 2\n3 2\n2 1 3\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(e.column() >= 4);
        }
        try {
            parse_matrix("2\n1 x\n2 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 3);
        }
        CHECK_THROWS_AS(parse_matrix("3\n1 2 3\n"), ParseError);
        CHECK_THROWS_AS(parse_matrix("1\n1\n1\n"), ParseError);
        CHECK_THROWS_AS(parse_matrix("2\n1 2 1\n2 1\n"), ParseError);
        CHECK_THROWS_AS(parse_matrix(""), ParseError);
        CHECK_THROWS_AS(parse_quandle("2\n1 3\n2 2\n"), Error);
    }

    TEST_CASE("emit and load round trip") {
        for (const char* s : {"dihedral:5", "alexander:4:3", "poly:2:t^3+t+1:t", "trivial:1"}) {
            auto X = make(s);
            const std::string text = emit(X);
            auto p = temp_file("rt.txt", text);
            auto Y = load(p.string());
            CHECK(same_table(X, Y));
            CHECK(emit(Y) == text);
            CHECK(read_file(p.string()) == text);
        }
        CHECK(emit(dihedral(3)) == "3\n1 3 2\n3 2 1\n2 1 3\n");
        CHECK_THROWS_AS(load("/nonexistent/quandle.txt"), MissingFile);
    }

    TEST_CASE("digest") {
        // FNV-1a 64 reference values
        CHECK(digest("") == "cbf29ce484222325");
        CHECK(digest("a") == "af63dc4c8601ec8c");
        CHECK(digest("foobar") == "85944171f73967e8");
        CHECK(digest(emit(dihedral(3))).size() == 16);
    }
}

#include <doctest.h>

#include <numeric>
#include <set>

#include "quandle/constructions.hpp"
#include "quandle/core.hpp"

using namespace quandle;

namespace {

// Independent oracles over the raw row-major view.

bool brute_distributive(const RawTable& r) {
    const std::size_t n = r.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (r[static_cast<std::size_t>(r[a][b])][c] !=
                    r[static_cast<std::size_t>(r[a][c])][static_cast<std::size_t>(r[b][c])])
                    return false;
    return true;
}

std::uint64_t brute_type(const QuandleTable& X) {
    for (std::uint64_t k = 1;; ++k) {
        bool ok = true;
        for (Element x = 0; ok && x < static_cast<Element>(X.order()); ++x)
            for (Element y = 0; ok && y < static_cast<Element>(X.order()); ++y) {
                Element z = x;
                for (std::uint64_t i = 0; i < k; ++i) z = X.op(z, y);
                ok = z == x;
            }
        if (ok) return k;
    }
}

bool brute_connected(const QuandleTable& X) {
    const std::size_t n = X.order();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            parent[find(x)] = find(static_cast<std::size_t>(X.op(static_cast<Element>(x), static_cast<Element>(y))));
    for (std::size_t x = 0; x < n; ++x)
        if (find(x) != find(0)) return false;
    return true;
}

bool brute_medial(const QuandleTable& X) {
    const auto n = static_cast<Element>(X.order());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element u = 0; u < n; ++u)
                for (Element v = 0; v < n; ++v)
                    if (X.op(X.op(x, y), X.op(u, v)) != X.op(X.op(x, u), X.op(y, v))) return false;
    return true;
}

std::vector<QuandleTable> sample_corpus() {
    std::vector<QuandleTable> c;
    for (const char* s : {"trivial:3", "dihedral:3", "dihedral:4", "dihedral:6", "alexander:5:2", "alexander:4:3",
                          "alexander:7:3", "poly:2:t^2+t+1:t", "poly:2:t^3+t+1:t", "conjugation-sym:3",
                          "conjugation-sym:4"})
        c.push_back(make(s));
    return c;
}

}  // namespace

TEST_SUITE("core") {
    TEST_CASE("dihedral(3) table") {
        auto X = dihedral(3);
        CHECK(X.rows() == std::vector<std::vector<Element>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
        CHECK(X.is_quandle());
        CHECK(X.op(0, 1) == 2);
        auto col = X.column(1);
        CHECK(std::vector<Element>(col.begin(), col.end()) == std::vector<Element>{2, 1, 0});
    }

    TEST_CASE("a non-bijective column is reported with its index") {
        RawTable raw{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        raw[0][1] = 0;
        auto v = check_axioms(raw, Mode::rack);
        REQUIRE(v.has_value());
        CHECK(v->axiom == Axiom::column_not_bijective);
        CHECK(v->witness == std::vector<Element>{1});
        CHECK(to_string(v->axiom) == "ColumnNotBijective");
        CHECK_THROWS_AS(QuandleTable::from_rows(raw), ValidationError);
        auto report = validate(raw, Mode::rack, false);
        CHECK_FALSE(report.is_rack);
        CHECK(report.violation.has_value());
    }

    TEST_CASE("out-of-range entries and ragged rows") {
        CHECK(check_axioms({{0, 3}, {1, 1}}, Mode::rack)->axiom == Axiom::out_of_range_entry);
        CHECK(check_axioms({{0, 1}, {1}}, Mode::rack)->axiom == Axiom::out_of_range_entry);
        CHECK(check_axioms({{0, -1}, {1, 1}}, Mode::rack)->witness == std::vector<Element>{0, 1});
    }

    TEST_CASE("self-distributivity failure agrees with brute force") {
        // R_0 = (1 2), R_1 = (0 2), R_2 = id
        RawTable raw{{0, 2, 0}, {2, 1, 1}, {1, 0, 2}};
        REQUIRE_FALSE(brute_distributive(raw));
        auto v = check_axioms(raw, Mode::rack);
        REQUIRE(v.has_value());
        CHECK(v->axiom == Axiom::self_distributivity_fails);
        const auto& w = v->witness;
        REQUIRE(w.size() == 3);
        auto a = static_cast<std::size_t>(w[0]), b = static_cast<std::size_t>(w[1]), c = static_cast<std::size_t>(w[2]);
        CHECK(raw[static_cast<std::size_t>(raw[a][b])][c] != raw[static_cast<std::size_t>(raw[a][c])][static_cast<std::size_t>(raw[b][c])]);
    }

    TEST_CASE("cyclic shift rack is a rack but not a quandle") {
        RawTable raw(4, std::vector<long long>(4));
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) raw[x][y] = (x + 1) % 4;
        CHECK_FALSE(check_axioms(raw, Mode::rack).has_value());
        auto v = check_axioms(raw, Mode::quandle);
        REQUIRE(v.has_value());
        CHECK(v->axiom == Axiom::idempotency_fails);
        auto X = QuandleTable::from_rows(raw, Mode::rack);
        CHECK_FALSE(X.is_quandle());
        CHECK(rack_type(X) == 4);
        CHECK(inner_group(X).order() == 4);
    }

    TEST_CASE("Alexander Z_5 with t=2: translation by 0 doubles") {
        auto X = alexander_zn(5, 2);
        for (Element x = 0; x < 5; ++x) CHECK(X.op(x, 0) == (2 * x) % 5);
        CHECK(translate(X, 0) == Permutation({0, 2, 4, 1, 3}));
    }

    TEST_CASE("left-associated products") {
        std::vector<Element> ys{1, 1};
        CHECK(product(dihedral(3), 0, ys) == 0);
        std::vector<Element> abab{1, 0, 1, 0};
        CHECK(product(alexander_zn(5, 2), 0, abab) == 0);
        CHECK(product(dihedral(3), 2, {}) == 2);
    }

    TEST_CASE("Inn orders and exponents") {
        CHECK(inner_group(trivial_quandle(3)).order() == 1);
        CHECK(inner_group(dihedral(3)).order() == 6);
        CHECK(inner_group(alexander_zn(5, 2)).order() == 20);
        CHECK(group_exponent(inner_group(dihedral(3))) == 6);
        auto G = inner_group(dihedral(3));
        CHECK(std::is_sorted(G.elements.begin(), G.elements.end()));
    }

    TEST_CASE("packed inner summary matches the full closure") {
        for (const auto& X : sample_corpus()) {
            auto G = inner_group(X);
            auto s = inner_summary(X);
            CHECK(s.order == G.order());
            CHECK(s.exponent == group_exponent(G));
        }
    }

    TEST_CASE("closure cap is enforced") {
        CHECK_THROWS_AS(inner_group(conjugation(symmetric_group(4)), 5), ClosureBudgetExceeded);
        CHECK_THROWS_AS(inner_summary(conjugation(symmetric_group(4)), 5), ClosureBudgetExceeded);
    }

    TEST_CASE("invariants of dihedral(3), Z_4 with t=3 and GF(4)") {
        auto d3 = invariants(dihedral(3));
        CHECK(d3.type == 2);
        CHECK(d3.is_connected);
        CHECK(d3.is_medial);
        CHECK(d3.is_faithful);
        CHECK(d3.inn_order == 6);
        CHECK(d3.inn_exponent == 6);

        auto Z4 = alexander_zn(4, 3);
        auto z = invariants(Z4);
        CHECK(z.type == 2);
        CHECK_FALSE(z.is_connected);
        CHECK_FALSE(z.is_faithful);
        CHECK(translate(Z4, 0) == translate(Z4, 2));
        CHECK(inner_representation(Z4).image.order() == 2);

        auto gf4 = invariants(make("poly:2:t^2+t+1:t"));
        CHECK(gf4.type == 3);
        CHECK(gf4.is_connected);
    }

    TEST_CASE("type, connectivity and mediality agree with brute force") {
        for (const auto& X : sample_corpus()) {
            CHECK(rack_type(X) == brute_type(X));
            CHECK(is_connected(X) == brute_connected(X));
            if (X.order() <= 12) CHECK(is_medial(X) == brute_medial(X));
            if (auto w = mediality_witness(X)) {
                const auto& q = *w;
                CHECK(X.op(X.op(q[0], q[1]), X.op(q[2], q[3])) != X.op(X.op(q[0], q[2]), X.op(q[1], q[3])));
            }
        }
    }

    TEST_CASE("faithfulness means distinct columns") {
        for (const auto& X : sample_corpus()) {
            std::set<std::vector<Element>> cols;
            for (Element b = 0; b < static_cast<Element>(X.order()); ++b) {
                auto c = X.column(b);
                cols.emplace(c.begin(), c.end());
            }
            CHECK(is_faithful(X) == (cols.size() == X.order()));
        }
    }

    TEST_CASE("inner representation is a quandle homomorphism") {
        for (const auto& X : sample_corpus()) {
            if (!X.is_quandle()) continue;
            auto inn = inner_representation(X);
            for (Element x = 0; x < static_cast<Element>(X.order()); ++x)
                for (Element y = 0; y < static_cast<Element>(X.order()); ++y)
                    CHECK(inn.map[static_cast<std::size_t>(X.op(x, y))] ==
                          inn.image.op(inn.map[static_cast<std::size_t>(x)], inn.map[static_cast<std::size_t>(y)]));
        }
    }

    TEST_CASE("permutation basics") {
        Permutation p({1, 2, 0, 3});
        CHECK(p.order() == 3);
        CHECK(p.then(p.inverse()).is_identity());
        CHECK(p.then(p)(0) == 2);
        CHECK(p.cycle_string() == "(0 1 2)(3)");
        CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
    }

    TEST_CASE("lcm overflow is detected") {
        CHECK(lcm_checked(4, 6) == 12);
        CHECK_THROWS(lcm_checked(1ULL << 63, 3));
    }
}

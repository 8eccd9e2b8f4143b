#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "quandle/constructions.hpp"
#include "quandle/identities.hpp"

using namespace quandle;

namespace {

QuandleTable restrict_to(const QuandleTable& X, const std::vector<Element>& elems) {
    RawTable raw(elems.size(), std::vector<long long>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            const Element z = X.op(elems[i], elems[j]);
            raw[i][j] = std::find(elems.begin(), elems.end(), z) - elems.begin();
        }
    return QuandleTable::from_rows(raw, Mode::quandle);
}

GroupTable cyclic_group(std::size_t n) {
    GroupTable g;
    g.mul.assign(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = static_cast<Element>((a + b) % n);
    return g;
}

/// Multiplication in GF(2)[t]/(f), f given as a bit mask including the leading term.
unsigned gf2_mul(unsigned a, unsigned b, unsigned f, unsigned degree) {
    unsigned r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> degree & 1) a ^= f;
    }
    return r;
}

}  // namespace

TEST_SUITE("constructions") {
    TEST_CASE("basic families") {
        auto D3 = dihedral(3);
        const std::vector<std::vector<Element>> expected{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        for (Element x = 0; x < 3; ++x)
            for (Element y = 0; y < 3; ++y) CHECK(D3.op(x, y) == expected[x][y]);
        for (std::size_t n = 1; n <= 7; ++n) {
            auto D = dihedral(n);
            for (Element x = 0; x < static_cast<Element>(n); ++x)
                for (Element y = 0; y < static_cast<Element>(n); ++y)
                    CHECK(D.op(x, y) == static_cast<Element>((2 * static_cast<std::size_t>(y) + n -
                                                              static_cast<std::size_t>(x)) % n));
        }
        auto T = trivial_quandle(4);
        CHECK(T.op(2, 3) == 2);
        auto A = alexander_zn(5, 2);
        CHECK(A.op(1, 3) == static_cast<Element>((2 * 1 + 4 * 3) % 5));
        CHECK(rack_type(A) == 4);
        CHECK(is_connected(A));
        CHECK(satisfies(A, Word::parse("abab")).satisfied);
        CHECK_THROWS_AS(alexander_zn(6, 2), NotAUnit);
    }

    TEST_CASE("polynomial rings") {
        CHECK(parse_polynomial("t^3+t^2+1", 2) == std::vector<std::uint64_t>{1, 0, 1, 1});
        CHECK(parse_polynomial("1,0,1,1", 2) == std::vector<std::uint64_t>{1, 0, 1, 1});
        CHECK(parse_polynomial("2t+3", 5) == std::vector<std::uint64_t>{3, 2});
        CHECK(parse_polynomial("t^2+t^2", 3) == std::vector<std::uint64_t>{0, 0, 2});
        CHECK_THROWS(parse_polynomial("t^", 2));
        CHECK_THROWS(parse_polynomial("", 2));
        PolyRing F4(2, {1, 1, 1});
        CHECK(F4.size() == 4);
        CHECK(F4.is_field());
        CHECK(F4.power(F4.t(), 3) == F4.one());
        PolyRing R(2, {1, 0, 1});  // t^2+1 = (t+1)^2
        CHECK_FALSE(R.is_field());
        CHECK_FALSE(R.is_unit(R.element({1, 1})));
        CHECK_THROWS_AS(PolyRing(4, {1, 1}), NotPrime);
        CHECK_THROWS_AS(alexander_poly(2, {1, 0, 1}, {1, 1}), NotAUnit);
    }

    TEST_CASE("order-8 Alexander quandles against bit arithmetic") {
        for (unsigned f : {0b1101u, 0b1011u}) {
            const std::vector<std::uint64_t> coeffs{f & 1, f >> 1 & 1, f >> 2 & 1, 1};
            auto X = alexander_poly(2, coeffs, {0, 1});
            CHECK(X.order() == 8);
            CHECK(rack_type(X) == 7);
            CHECK(is_connected(X));
            for (unsigned x = 0; x < 8; ++x)
                for (unsigned y = 0; y < 8; ++y) {
                    // x*y = t x + (1 - t) y, with 1 - t = 1 + t in characteristic 2
                    const unsigned z = gf2_mul(2, x, f, 3) ^ gf2_mul(3, y, f, 3);
                    CHECK(X.op(static_cast<Element>(x), static_cast<Element>(y)) == static_cast<Element>(z));
                }
        }
    }

    TEST_CASE("generalized Alexander over a cyclic group is the Alexander quandle") {
        for (auto [n, t] : {std::pair<std::size_t, std::size_t>{5, 2}, {7, 3}, {8, 3}, {9, 2}}) {
            std::vector<Element> f(n);
            for (std::size_t x = 0; x < n; ++x) f[x] = static_cast<Element>(x * t % n);
            auto G = gen_alexander(cyclic_group(n), f);
            auto A = alexander_zn(n, t);
            for (Element x = 0; x < static_cast<Element>(n); ++x)
                for (Element y = 0; y < static_cast<Element>(n); ++y) CHECK(G.op(x, y) == A.op(x, y));
        }
        std::vector<Element> bad{0, 2, 2, 3, 4};
        CHECK_THROWS_AS(gen_alexander(cyclic_group(5), bad), NotAnAutomorphism);
        std::vector<Element> square{0, 2, 4, 0, 2, 4};  // x -> 2x is not injective on Z_6
        CHECK_THROWS_AS(gen_alexander(cyclic_group(6), square), NotAnAutomorphism);
    }

    TEST_CASE("conjugation quandle of S3") {
        auto S3 = symmetric_group(3);
        CHECK_NOTHROW(S3.validate());
        CHECK(S3.order() == 6);
        auto C = conjugation(S3);
        CHECK(C.order() == 6);
        std::vector<Element> transpositions;
        for (Element g = 1; g < 6; ++g)
            if (S3.mul[g][g] == 0) transpositions.push_back(g);
        REQUIRE(transpositions.size() == 3);
        CHECK(canonical_form(restrict_to(C, transpositions)) == canonical_form(dihedral(3)));
        for (Element x = 0; x < 6; ++x)
            for (Element y = 0; y < 6; ++y)
                CHECK(C.op(x, y) == S3.mul[S3.mul[S3.inverse(y)][x]][y]);
    }

    TEST_CASE("Burnside family") {
        CHECK(burnside_polynomial(1, 2) == std::vector<std::uint64_t>{1, 1});
        CHECK(burnside_polynomial(2, 3) == std::vector<std::uint64_t>{1, 0, 1, 0, 1});
        auto B = burnside_family(1, 2, 3);
        CHECK(B.order() == 3);
        CHECK(canonical_form(B) == canonical_form(dihedral(3)));
        CHECK(satisfies(B, Word::parse("aa")).satisfied);
        auto B2 = burnside_family(2, 2, 3);
        CHECK(B2.order() == 9);
        CHECK(is_connected(B2));
        CHECK(satisfies(B2, Word::parse("abab")).satisfied);
        auto B3 = burnside_family(1, 3, 5);
        CHECK(B3.order() == 25);
        CHECK(satisfies(B3, Word::parse("aaa")).satisfied);
        CHECK_THROWS_AS(burnside_family(1, 2, 4), NotPrime);
        CHECK_THROWS_AS(burnside_family(1, 3, 3), PNotGreaterThanN);
    }

    TEST_CASE("connected quandle enumeration") {
        const std::vector<std::size_t> counts{0, 1, 0, 1, 1, 3, 2};
        for (std::size_t n = 1; n <= 6; ++n) {
            auto qs = enumerate_connected(n);
            CHECK_MESSAGE(qs.size() == counts[n], "order " << n);
            for (const auto& q : qs) {
                CHECK(q.is_quandle());
                CHECK(is_connected(q));
                std::vector<Element> flat;
                for (Element x = 0; x < static_cast<Element>(n); ++x)
                    for (Element y = 0; y < static_cast<Element>(n); ++y) flat.push_back(q.op(x, y));
                CHECK(canonical_form(q) == flat);
            }
        }
        auto five = enumerate_connected(5);
        std::set<std::vector<Element>> forms;
        for (const auto& q : five) forms.insert(canonical_form(q));
        CHECK(forms.count(canonical_form(alexander_zn(5, 2))) == 1);
        CHECK(forms.count(canonical_form(alexander_zn(5, 3))) == 1);
        CHECK(forms.count(canonical_form(dihedral(5))) == 1);
        CHECK_THROWS_AS(enumerate_connected(7), CapExceeded);
    }

    TEST_CASE("constructions are quandles and Alexander ones are medial") {
        std::mt19937 rng(19);
        for (const char* s : {"alexander:5:2", "alexander:7:3", "poly:3:t^2+1:t", "poly:2:t^3+t+1:t",
                              "burnside:2:2:3"}) {
            auto X = make(s);
            CHECK(X.is_quandle());
            CHECK(is_medial(X));
        }
        CHECK_FALSE(is_medial(make("conjugation-sym:3")));
        // closed form x y_1 ... y_k = t^k x + (1-t) sum t^(k-i) y_i over Z_7, t = 3
        auto X = alexander_zn(7, 3);
        std::uniform_int_distribution<Element> e(0, 6);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Element> ys(static_cast<std::size_t>(1 + trial % 6));
            for (auto& y : ys) y = e(rng);
            const Element x = e(rng);
            long long expected = x;
            for (Element y : ys) expected = (3 * expected + (1 - 3 + 7) * y) % 7;
            CHECK(product(X, x, ys) == static_cast<Element>(expected));
        }
        CHECK_THROWS(make("nonsense:3"));
        CHECK_THROWS(make("dihedral"));
        CHECK_THROWS(make("dihedral:x"));
    }
}

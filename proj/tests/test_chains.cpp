#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quandle/chains.hpp"
#include "quandle/constructions.hpp"
#include "type3_example.hpp"

using namespace quandle;

namespace {

oracle::Chain to_oracle(const FormalChain& c) {
    oracle::Chain out;
    for (const auto& [t, coef] : c.terms()) out[t] = coef;
    return out;
}

FormalChain random_chain(std::mt19937& rng, std::size_t order, std::size_t degree, int terms) {
    std::uniform_int_distribution<Element> e(0, static_cast<Element>(order - 1));
    std::uniform_int_distribution<int> coef(-3, 3);
    FormalChain c(degree);
    for (int i = 0; i < terms; ++i) {
        Tuple t(degree);
        for (auto& x : t) x = e(rng);
        c.add(t, coef(rng));
    }
    return c;
}

}  // namespace

TEST_SUITE("chains") {
    TEST_CASE("tuple basis") {
        CHECK(basis_size(3, 4) == 81);
        CHECK_THROWS_AS(basis_size(10, 6, 1000), SizeGuardExceeded);
        CHECK(tuple_index(3, {0, 2, 1}) == 7);
        CHECK(tuple_at(3, 3, 7) == Tuple{0, 2, 1});
        for (std::size_t i = 0; i < 64; ++i) CHECK(tuple_index(4, tuple_at(4, 3, i)) == i);
    }

    TEST_CASE("formal chain arithmetic and text") {
        FormalChain c(2);
        c.add({0, 1});
        c.add({2, 0}, -2);
        CHECK(c.to_text() == "1 * (1,2) - 2 * (3,1)");
        c.add({0, 1}, -1);
        CHECK(c.to_text() == "-2 * (3,1)");
        CHECK((c - c).is_zero());
        CHECK((c - c).to_text() == "0");
        CHECK((-c).coefficient({2, 0}) == 2);
        auto v = c.to_sparse(3);
        CHECK(FormalChain::from_sparse(3, 2, v) == c);
    }

    TEST_CASE("faces and boundary on the dihedral quandle") {
        auto X = dihedral(3);
        CHECK(face(X, Tuple{0, 1}, 2, FaceKind::d) == Tuple{0});
        CHECK(face(X, Tuple{0, 1}, 2, FaceKind::delta) == Tuple{2});
        CHECK_THROWS_AS(face(X, Tuple{0, 1}, 3, FaceKind::d), IndexOutOfRange);
        FormalChain c(2);
        c.add({0, 1});
        CHECK(boundary(X, c).to_text() == "1 * (1) - 1 * (3)");
    }

    TEST_CASE("boundary matches the oracle and squares to zero") {
        std::mt19937 rng(7);
        for (const char* s : {"dihedral:3", "dihedral:4", "alexander:5:2", "poly:2:t^2+t+1:t", "trivial:3"}) {
            auto X = make(s);
            for (std::size_t deg = 2; deg <= 5; ++deg)
                for (int trial = 0; trial < 10; ++trial) {
                    auto c = random_chain(rng, X.order(), deg, 6);
                    auto b = boundary(X, c);
                    CHECK(to_oracle(b) == oracle::rack_boundary(X, to_oracle(c)));
                    if (deg >= 3) CHECK(boundary(X, b).is_zero());
                }
        }
    }

    TEST_CASE("identity 2-cycles") {
        auto D3 = dihedral(3);
        auto L = cycle_LS(D3, Word::parse("aa"), {0, {1}});
        CHECK(L.to_text() == "1 * (1,2) + 1 * (3,2)");
        CHECK(boundary(D3, L).is_zero());
        CHECK_THROWS_AS(cycle_LS(D3, Word::parse("aaa"), {0, {1}}), IdentityNotSatisfied);
        CHECK_NOTHROW(cycle_LS(D3, Word::parse("aaa"), {0, {1}}, Strictness::permissive));

        // type-3 quandle: L = (x,y) + (x*y,y) + (x*y*y,y)
        auto G = make("poly:2:t^2+t+1:t");
        for (Element x = 0; x < 4; ++x)
            for (Element y = 0; y < 4; ++y) {
                FormalChain expected(2);
                expected.add({x, y});
                expected.add({G.op(x, y), y});
                expected.add({G.op(G.op(x, y), y), y});
                CHECK(cycle_LS(G, Word::parse("aaa"), {x, {y}}) == expected);
                auto gens = subcomplex_generators(G, SubcomplexKind::identity(Word::parse("aaa")), 2);
                CHECK(in_span(G, expected, gens));
            }
    }

    TEST_CASE("medial 2-cycles") {
        auto X = alexander_zn(5, 2);
        for (Element x = 0; x < 5; ++x)
            for (Element y = 0; y < 5; ++y) {
                auto c = medial_LS(X, x, y, (x + 2) % 5, (y + 3) % 5);
                CHECK(boundary(X, c).is_zero());
            }
        auto S = make("conjugation-sym:3");
        const auto n = static_cast<Element>(S.order());
        bool found = false;
        for (Element x = 0; x < n && !found; ++x)
            for (Element y = 0; y < n && !found; ++y)
                for (Element u = 0; u < n && !found; ++u)
                    for (Element v = 0; v < n && !found; ++v)
                        if (S.op(S.op(x, y), S.op(u, v)) != S.op(S.op(x, u), S.op(y, v))) {
                            found = true;
                            CHECK_THROWS_AS(medial_LS(S, x, y, u, v), NotMedial);
                        }
        CHECK(found);
    }

    TEST_CASE("subcomplex generators") {
        auto D3 = dihedral(3);
        auto gens = subcomplex_generators(D3, SubcomplexKind::identity(Word::parse("aa")), 2);
        CHECK_FALSE(gens.chains.empty());
        FormalChain single(2);
        single.add({0, 1});
        CHECK_FALSE(in_span(D3, single, gens));
        for (const auto& g : gens.chains) CHECK(in_span(D3, g, gens));

        auto deg = subcomplex_generators(D3, SubcomplexKind::degenerate(), 3);
        for (const auto& g : deg.chains) {
            REQUIRE(g.terms().size() == 1);
            const Tuple& t = g.terms().begin()->first;
            bool repeated = false;
            for (std::size_t i = 0; i + 1 < t.size(); ++i) repeated |= t[i] == t[i + 1];
            CHECK(repeated);
        }
        CHECK(deg.chains.size() == 27 - 3 * 2 * 2);
        CHECK_THROWS_AS(subcomplex_generators(D3, SubcomplexKind::degenerate(), 1), DegreeTooSmall);
    }

    TEST_CASE("generator boundaries stay in the identity subcomplex") {
        for (const char* s : {"dihedral:3", "poly:2:t^2+t+1:t"}) {
            auto X = make(s);
            const Word w = Word::parse(X.order() == 3 ? "aa" : "aaa");
            for (std::size_t deg = 3; deg <= 4; ++deg) {
                auto top = subcomplex_generators(X, SubcomplexKind::identity(w), deg);
                auto low = subcomplex_generators(X, SubcomplexKind::identity(w), deg - 1);
                auto L = span_lattice(X, low);
                for (const auto& g : top.chains) CHECK(L.contains(boundary(X, g).to_sparse(X.order())));
            }
        }
    }

    TEST_CASE("worked type-3 generator") {
        auto G = make("poly:2:t^2+t+1:t");
        CHECK(example::check_type3_generator(G) == "");
    }

    TEST_CASE("right distributivity lemma identities") {
        for (const char* s : {"dihedral:3", "dihedral:4", "alexander:5:2"}) {
            auto X = make(s);
            const auto n = static_cast<Element>(X.order());
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b)
                    for (Element c1 = 0; c1 < n; ++c1)
                        for (Element c2 = 0; c2 < n; ++c2) {
                            // (a c1 c2)(b c1 c2) = (ab) c1 c2
                            Element ac = X.op(X.op(a, c1), c2), bc = X.op(X.op(b, c1), c2);
                            CHECK(X.op(ac, bc) == X.op(X.op(X.op(a, b), c1), c2));
                            // a1 a2 a3 b = (a1 b)(a2 b)(a3 b) with a1=a, a2=c1, a3=c2
                            Element lhs = X.op(X.op(X.op(a, c1), c2), b);
                            Element rhs = X.op(X.op(X.op(a, b), X.op(c1, b)), X.op(c2, b));
                            CHECK(lhs == rhs);
                        }
        }
    }
}

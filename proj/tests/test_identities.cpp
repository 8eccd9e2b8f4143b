#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "quandle/constructions.hpp"
#include "quandle/identities.hpp"

using namespace quandle;

namespace {

std::vector<std::string> texts(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.text());
    return out;
}

bool brute_satisfies(const QuandleTable& X, const Word& w) {
    bool ok = true;
    for (Element x = 0; ok && x < static_cast<Element>(X.order()); ++x)
        for_each_tuple(X.order(), w.alphabet(), [&](const std::vector<Element>& ys) {
            Element z = x;
            for (int l : w.tau()) z = X.op(z, ys[static_cast<std::size_t>(l)]);
            ok = z == x;
            return ok;
        });
    return ok;
}

QuandleTable relabel(const QuandleTable& X, const std::vector<Element>& s) {
    const std::size_t n = X.order();
    RawTable raw(n, std::vector<long long>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            raw[static_cast<std::size_t>(s[x])][static_cast<std::size_t>(s[y])] =
                s[static_cast<std::size_t>(X.op(static_cast<Element>(x), static_cast<Element>(y)))];
    return QuandleTable::from_rows(raw, X.is_quandle() ? Mode::quandle : Mode::rack);
}

/// x w = t^k x + (1-t) sum_i t^(k-i) y_tau(i) over Z_n.
bool alexander_closed_form(std::uint64_t n, std::uint64_t t, const Word& w) {
    const std::size_t k = w.length();
    auto pw = [&](std::size_t e) {
        std::uint64_t r = 1 % n;
        for (std::size_t i = 0; i < e; ++i) r = r * t % n;
        return r;
    };
    if (pw(k) != 1 % n) return false;
    std::vector<std::uint64_t> coef(w.alphabet(), 0);
    for (std::size_t i = 1; i <= k; ++i) {
        auto& c = coef[static_cast<std::size_t>(w.tau()[i - 1])];
        c = (c + pw(k - i)) % n;
    }
    const std::uint64_t one_minus_t = (1 + n - t % n) % n;
    return std::all_of(coef.begin(), coef.end(), [&](std::uint64_t c) { return c * one_minus_t % n == 0; });
}

std::vector<QuandleTable> corpus() {
    std::vector<QuandleTable> c;
    for (const char* s : {"trivial:2", "dihedral:3", "dihedral:4", "alexander:5:2", "alexander:5:3", "alexander:4:3",
                          "poly:2:t^2+t+1:t", "conjugation-sym:3", "burnside:2:2:3"})
        c.push_back(make(s));
    return c;
}

}  // namespace

TEST_SUITE("identities") {
    TEST_CASE("parsing canonicalizes letter names") {
        CHECK(Word::parse("ba") == Word::parse("ab"));
        CHECK(Word::parse("cac").text() == "aba");
        CHECK(Word::parse("abcab").alphabet() == 3);
        CHECK(Word::parse("abcab").tau() == std::vector<int>{0, 1, 2, 0, 1});
        CHECK(Word::parse("aabab").letter_counts() == std::vector<std::size_t>{3, 2});
        CHECK(Word::parse("ab").repeated(3).text() == "ababab");
        CHECK_THROWS_AS(Word::parse(""), EmptyWord);
        CHECK_THROWS_AS(Word::parse("a1"), NonLetterCharacter);
        CHECK_THROWS_AS(Word::parse("aB"), NonLetterCharacter);
    }

    TEST_CASE("word enumeration") {
        CHECK(texts(enumerate_words(2, 1, WordFilter::all)) == std::vector<std::string>{"aa"});
        CHECK(texts(enumerate_words(4, 2, WordFilter::nontrivial_candidates)) ==
              std::vector<std::string>{"aabb", "abab", "abba"});

        auto all5 = enumerate_words(5, 2, WordFilter::all);
        CHECK(all5.size() == 15);  // Stirling S(5,2)
        auto t = texts(all5);
        CHECK(std::is_sorted(t.begin(), t.end()));

        // the ten length-5 words left after the single-occurrence lemma
        std::set<std::string> ten;
        for (const auto& w : all5)
            if (!lemma_trivial(w)) ten.insert(w.text());
        CHECK(ten == std::set<std::string>{"aaabb", "aabab", "aabba", "abaab", "ababa", "abbaa", "aabbb", "ababb",
                                           "abbab", "abbba"});
        // of which five survive the gcd lemma
        auto five = texts(enumerate_words(5, 2, WordFilter::nontrivial_candidates));
        CHECK(std::set<std::string>(five.begin(), five.end()) ==
              std::set<std::string>{"aabab", "abaab", "ababa", "ababb", "abbab"});

        std::size_t bell5 = 0;
        for (std::size_t m = 1; m <= 5; ++m) bell5 += enumerate_words(5, m, WordFilter::all).size();
        CHECK(bell5 == 52);
        CHECK_THROWS(enumerate_words(3, 4, WordFilter::all));
    }

    TEST_CASE("lemmas") {
        CHECK(lemma_trivial(Word::parse("aab")));
        CHECK(lemma_trivial(Word::parse("a")));
        CHECK_FALSE(lemma_trivial(Word::parse("abab")));
        CHECK(lemma_type_bound(Word::parse("aabb")) == 2u);
        CHECK(lemma_type_bound(Word::parse("aaabb")) == 1u);
        CHECK(lemma_type_bound(Word::parse("abba")) == 2u);
        CHECK(lemma_type_bound(Word::parse("aaabbba")) == 1u);
        CHECK(lemma_type_bound(Word::parse("aaabbbaaa")) == 3u);
        CHECK_FALSE(lemma_type_bound(Word::parse("abab")).has_value());
        CHECK_FALSE(lemma_type_bound(Word::parse("aaa")).has_value());
        CHECK_FALSE(lemma_type_bound(Word::parse("abcabc")).has_value());
    }

    TEST_CASE("satisfaction agrees with direct evaluation") {
        for (const auto& X : corpus())
            for (std::size_t k = 1; k <= 4; ++k)
                for (std::size_t m = 1; m <= k; ++m)
                    for (const auto& w : enumerate_words(k, m, WordFilter::all)) {
                        auto r = satisfies(X, w);
                        CHECK(r.satisfied == brute_satisfies(X, w));
                        if (!r.satisfied) {
                            REQUIRE(r.witness.has_value());
                            CHECK(evaluate_word(X, w, r.witness->x, r.witness->ys) != r.witness->x);
                        }
                    }
    }

    TEST_CASE("satisfaction matches the Alexander closed form") {
        for (auto [n, t] : {std::pair<std::uint64_t, std::uint64_t>{5, 2}, {5, 3}, {5, 4}, {7, 3}, {7, 2}, {9, 2}, {8, 3}}) {
            auto X = alexander_zn(n, t);
            for (std::size_t k = 2; k <= 6; ++k)
                for (std::size_t m = 1; m <= 2; ++m)
                    for (const auto& w : enumerate_words(k, m, WordFilter::all))
                        CHECK_MESSAGE(satisfies(X, w).satisfied == alexander_closed_form(n, t, w),
                                      "Z_" << n << " t=" << t << " " << w.text());
        }
    }

    TEST_CASE("satisfaction is invariant under relabeling") {
        std::mt19937 rng(3);
        for (const auto& X : corpus()) {
            std::vector<Element> s(X.order());
            std::iota(s.begin(), s.end(), 0);
            std::shuffle(s.begin(), s.end(), rng);
            auto Y = relabel(X, s);
            for (const auto& w : enumerate_words(4, 2, WordFilter::all))
                CHECK(satisfies(X, w).satisfied == satisfies(Y, w).satisfied);
        }
    }

    TEST_CASE("a word repeated exponent(Inn X) times is always satisfied") {
        std::mt19937 rng(11);
        for (const auto& X : corpus()) {
            const auto e = inner_summary(X).exponent;
            for (int trial = 0; trial < 5; ++trial) {
                std::uniform_int_distribution<int> len(1, 3), letter(0, 2);
                std::vector<int> letters(static_cast<std::size_t>(len(rng)));
                for (auto& l : letters) l = letter(rng);
                const Word w = Word::from_letters(letters).repeated(e);
                if (w.length() > 40) continue;
                CHECK_MESSAGE(satisfies(X, w).satisfied, w.text());
            }
        }
    }

    TEST_CASE("scan report") {
        auto c = corpus();
        std::vector<Word> ws{Word::parse("aa"), Word::parse("abab"), Word::parse("aaa")};
        auto r = scan(c, ws);
        REQUIRE(r.satisfied.size() == c.size());
        for (std::size_t w = 0; w < ws.size(); ++w) {
            std::size_t count = 0;
            for (std::size_t q = 0; q < c.size(); ++q) {
                CHECK(r.satisfied[q][w] == satisfies(c[q], ws[w]).satisfied);
                count += r.satisfied[q][w];
            }
            CHECK(r.per_word_counts[w] == count);
        }
    }
}

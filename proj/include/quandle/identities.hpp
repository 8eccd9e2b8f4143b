#pragma once

// Inner identities x y_{tau(1)} ... y_{tau(k)} = x and the word lemmas that
// rule out most short words before any table is consulted.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/core.hpp"

namespace quandle {

class EmptyWord : public Error {
public:
    EmptyWord() : Error("empty word") {}
};

class NonLetterCharacter : public Error {
public:
    explicit NonLetterCharacter(char c) : Error(std::string("non-letter character '") + c + "' in word") {}
};

/// A surjection tau: {0..k-1} -> {0..m-1} in canonical form: letters are
/// numbered by first occurrence, so tau[0] == 0 and each new letter is the
/// next unused index.
class Word {
public:
    static Word parse(std::string_view text);
    /// Canonicalizes an arbitrary letter sequence (any non-negative ints).
    static Word from_letters(const std::vector<int>& letters);

    std::size_t length() const noexcept { return tau_.size(); }
    std::size_t alphabet() const noexcept { return m_; }
    const std::vector<int>& tau() const noexcept { return tau_; }
    std::vector<std::size_t> letter_counts() const;

    /// The word written n times in a row.
    Word repeated(std::size_t n) const;
    std::string text() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> tau_;
    std::size_t m_ = 0;
};

struct Assignment {
    Element x = 0;
    std::vector<Element> ys;  // values of y_1..y_m

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct SatisfactionReport {
    bool satisfied = true;
    std::optional<Assignment> witness;
    std::uint64_t tuples_checked = 0;
};

/// Calls f(ys) for every m-tuple over {0..n-1}, first coordinate fastest.
/// Stops early when f returns false.
template <class F>
void for_each_tuple(std::size_t n, std::size_t m, F f) {
    std::vector<Element> ys(m, 0);
    while (true) {
        if (!f(static_cast<const std::vector<Element>&>(ys))) return;
        std::size_t i = 0;
        while (i < m && ++ys[i] == static_cast<Element>(n)) ys[i++] = 0;
        if (i == m) return;
    }
}

/// Evaluates x w for the given y values.
Element evaluate_word(const QuandleTable& X, const Word& w, Element x, const std::vector<Element>& ys);

SatisfactionReport satisfies(const QuandleTable& X, const Word& w);

/// Some letter occurs exactly once (only trivial quandles satisfy such a word).
bool lemma_trivial(const Word& w);

/// gcd(k, |w| - k) for two-letter words of the literal shape a^h b^k a^(|w|-h-k).
std::optional<std::uint64_t> lemma_type_bound(const Word& w);

enum class WordFilter { all, nontrivial_candidates };

std::vector<Word> enumerate_words(std::size_t length, std::size_t alphabet, WordFilter filter);

struct ScanReport {
    std::vector<std::string> quandle_names;
    std::vector<Word> words;
    std::vector<std::vector<bool>> satisfied;  // [quandle][word]
    std::vector<std::size_t> per_word_counts;
};

ScanReport scan(const std::vector<QuandleTable>& corpus, const std::vector<Word>& words,
                std::vector<std::string> names = {});

}  // namespace quandle

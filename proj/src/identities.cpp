#include "quandle/identities.hpp"

#include <algorithm>
#include <numeric>

#include "quandle/kernels.hpp"

namespace quandle {

Word Word::parse(std::string_view text) {
    if (text.empty()) throw EmptyWord();
    std::vector<int> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c < 'a' || c > 'z') throw NonLetterCharacter(c);
        letters.push_back(c - 'a');
    }
    return from_letters(letters);
}

Word Word::from_letters(const std::vector<int>& letters) {
    if (letters.empty()) throw EmptyWord();
    Word w;
    std::vector<int> relabel;
    for (int l : letters) {
        if (l < 0) throw Error("negative letter");
        if (static_cast<std::size_t>(l) >= relabel.size()) relabel.resize(static_cast<std::size_t>(l) + 1, -1);
        auto& r = relabel[static_cast<std::size_t>(l)];
        if (r < 0) r = static_cast<int>(w.m_++);
        w.tau_.push_back(r);
    }
    return w;
}

std::vector<std::size_t> Word::letter_counts() const {
    std::vector<std::size_t> counts(m_);
    for (int l : tau_) ++counts[static_cast<std::size_t>(l)];
    return counts;
}

Word Word::repeated(std::size_t n) const {
    std::vector<int> letters;
    for (std::size_t i = 0; i < n; ++i) letters.insert(letters.end(), tau_.begin(), tau_.end());
    return from_letters(letters);
}

std::string Word::text() const {
    std::string s;
    for (int l : tau_) s.push_back(static_cast<char>('a' + l));
    return s;
}

Element evaluate_word(const QuandleTable& X, const Word& w, Element x, const std::vector<Element>& ys) {
    for (int l : w.tau()) x = X.op(x, ys[static_cast<std::size_t>(l)]);
    return x;
}

SatisfactionReport satisfies(const QuandleTable& X, const Word& w) {
    const std::size_t n = X.order();
    const auto& k = kernels::active();
    SatisfactionReport report;
    std::vector<Element> state(n);
    for_each_tuple(n, w.alphabet(), [&](const std::vector<Element>& ys) {
        // all x at once: state = R_{y_tau(k)} ... R_{y_tau(1)} applied to the identity
        std::iota(state.begin(), state.end(), 0);
        for (int l : w.tau()) k.gather_inplace(X.column(ys[static_cast<std::size_t>(l)]), state);
        const std::size_t x = k.first_non_fixed(state);
        if (x < n) {
            report.tuples_checked += x + 1;
            report.satisfied = false;
            report.witness = Assignment{static_cast<Element>(x), ys};
            return false;
        }
        report.tuples_checked += n;
        return true;
    });
    return report;
}

bool lemma_trivial(const Word& w) {
    auto counts = w.letter_counts();
    return std::find(counts.begin(), counts.end(), std::size_t{1}) != counts.end();
}

std::optional<std::uint64_t> lemma_type_bound(const Word& w) {
    if (w.alphabet() != 2) return std::nullopt;
    const auto& t = w.tau();
    auto first_b = std::find(t.begin(), t.end(), 1);
    auto after_b = std::find(first_b, t.end(), 0);
    if (std::find(after_b, t.end(), 1) != t.end()) return std::nullopt;
    const auto k = static_cast<std::uint64_t>(after_b - first_b);
    return std::gcd(k, static_cast<std::uint64_t>(t.size()) - k);
}

namespace {

void grow(std::vector<int>& prefix, std::size_t length, std::size_t alphabet, int max_used, std::vector<Word>& out) {
    const std::size_t remaining = length - prefix.size();
    const auto used = static_cast<std::size_t>(max_used + 1);
    if (remaining == 0) {
        if (used == alphabet) out.push_back(Word::from_letters(prefix));
        return;
    }
    if (used + remaining < alphabet) return;
    for (int l = 0; l <= max_used + 1 && static_cast<std::size_t>(l) < alphabet; ++l) {
        prefix.push_back(l);
        grow(prefix, length, alphabet, std::max(max_used, l), out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_words(std::size_t length, std::size_t alphabet, WordFilter filter) {
    if (length == 0 || alphabet == 0 || alphabet > length || alphabet > 26)
        throw Error("enumerate_words requires 1 <= alphabet <= length");
    std::vector<Word> all;
    std::vector<int> prefix{0};
    grow(prefix, length, alphabet, 0, all);
    if (filter == WordFilter::all) return all;
    std::vector<Word> kept;
    for (auto& w : all) {
        if (lemma_trivial(w)) continue;
        if (auto d = lemma_type_bound(w); d && *d == 1) continue;
        kept.push_back(std::move(w));
    }
    return kept;
}

ScanReport scan(const std::vector<QuandleTable>& corpus, const std::vector<Word>& words,
                std::vector<std::string> names) {
    ScanReport r;
    if (names.empty())
        for (std::size_t i = 0; i < corpus.size(); ++i) names.push_back("#" + std::to_string(i + 1));
    if (names.size() != corpus.size()) throw Error("scan: name count does not match corpus");
    r.quandle_names = std::move(names);
    r.words = words;
    r.per_word_counts.assign(words.size(), 0);
    for (const auto& X : corpus) {
        std::vector<bool> row;
        row.reserve(words.size());
        for (std::size_t j = 0; j < words.size(); ++j) {
            bool s = satisfies(X, words[j]).satisfied;
            row.push_back(s);
            if (s) ++r.per_word_counts[j];
        }
        r.satisfied.push_back(std::move(row));
    }
    return r;
}

}  // namespace quandle

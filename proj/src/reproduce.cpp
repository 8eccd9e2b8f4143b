#include "quandle/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <regex>
#include <sstream>

#include "quandle/chains.hpp"
#include "quandle/constructions.hpp"
#include "quandle/extensions.hpp"
#include "quandle/homology.hpp"

namespace quandle {

std::string to_string(Check::Status s) {
    switch (s) {
        case Check::Status::pass: return "PASS";
        case Check::Status::fail: return "FAIL";
        case Check::Status::skipped: return "SKIPPED";
    }
    return "?";
}

namespace {

template <class F>
Check timed(std::string name, F body) {
    Check c;
    c.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.status = Check::Status::fail;
        c.detail = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

void fail(Check& c, const std::string& why) {
    if (c.status != Check::Status::fail) c.detail.clear();
    c.status = Check::Status::fail;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += why;
}

NamedQuandle named(const std::string& spec) { return {spec, make(spec)}; }

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

/// Nontrivial-candidate words with one or two letters, lengths 1..max_length.
std::vector<Word> candidate_words(std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t k = 1; k <= max_length; ++k)
        for (std::size_t m = 1; m <= 2 && m <= k; ++m)
            for (auto& w : enumerate_words(k, m, WordFilter::nontrivial_candidates)) out.push_back(std::move(w));
    return out;
}

}  // namespace

std::vector<NamedQuandle> theorem_corpus() {
    std::vector<NamedQuandle> c;
    for (const char* s : {"trivial:1", "trivial:2", "trivial:3", "dihedral:3", "alexander:5:2", "alexander:5:3",
                          "poly:2:t^2+t+1:t", "poly:2:t^3+t^2+1:t", "poly:2:t^3+t+1:t", "burnside:1:2:3",
                          "burnside:2:2:3"})
        c.push_back(named(s));
    return c;
}

std::vector<NamedQuandle> small_corpus() {
    std::vector<NamedQuandle> c;
    for (const char* s : {"trivial:1", "trivial:2", "trivial:3", "trivial:4", "trivial:5", "dihedral:3", "dihedral:4",
                          "dihedral:5", "alexander:4:3", "alexander:5:2", "alexander:5:3", "poly:2:t^2+t+1:t"})
        c.push_back(named(s));
    for (std::size_t n = 3; n <= 5; ++n) {
        auto all = enumerate_connected(n);
        for (std::size_t i = 0; i < all.size(); ++i)
            c.push_back({"connected:" + std::to_string(n) + ":" + std::to_string(i + 1), all[i]});
    }
    std::vector<NamedQuandle> out;
    std::set<std::vector<Element>> seen;
    for (auto& q : c)
        if (seen.insert(canonical_form(q.table)).second) out.push_back(std::move(q));
    return out;
}

std::vector<NamedQuandle> full_corpus() {
    auto out = small_corpus();
    std::set<std::vector<Element>> seen;
    for (const auto& q : out) seen.insert(canonical_form(q.table));
    for (auto& q : theorem_corpus()) {
        if (q.table.order() <= 6 && !seen.insert(canonical_form(q.table)).second) continue;
        out.push_back(std::move(q));
    }
    return out;
}

bool is_kei(const QuandleTable& X) { return X.is_quandle() && 2 % rack_type(X) == 0; }

// ---------------------------------------------------------------------------

std::vector<DatasetEntry> load_dataset(const std::string& dir, Convention convention) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw MissingDataset("dataset directory '" + dir + "' not found");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().filename().string()[0] != '.') files.push_back(e.path());
    const std::regex id_pattern(R"((\d+)\D+(\d+)$)");
    std::vector<DatasetEntry> out;
    for (const auto& p : files) {
        const std::string text = read_file(p.string());
        DatasetEntry e{p.stem().string(), std::nullopt, digest(text), parse_quandle(text, convention, Mode::quandle)};
        std::smatch m;
        if (std::regex_search(e.name, m, id_pattern))
            e.rig_id = std::make_pair(static_cast<unsigned>(std::stoul(m[1])), static_cast<unsigned>(std::stoul(m[2])));
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const DatasetEntry& a, const DatasetEntry& b) {
        if (a.rig_id.has_value() != b.rig_id.has_value()) return a.rig_id.has_value();
        if (a.rig_id && *a.rig_id != *b.rig_id) return *a.rig_id < *b.rig_id;
        return a.name < b.name;
    });
    return out;
}

std::string rig_name(std::pair<unsigned, unsigned> id) {
    return "Q(" + std::to_string(id.first) + "," + std::to_string(id.second) + ")";
}

std::string display_name(const DatasetEntry& e) { return e.rig_id ? rig_name(*e.rig_id) : e.name; }

Census type_census(const std::vector<DatasetEntry>& entries) {
    Census c;
    for (const auto& e : entries) ++c[rack_type(e.table)];
    return c;
}

Census exponent_census(const std::vector<DatasetEntry>& entries, std::size_t closure_cap) {
    Census c;
    for (const auto& e : entries) ++c[inner_summary(e.table, closure_cap).exponent];
    return c;
}

std::string census_text(const Census& c) {
    std::string out;
    for (const auto& [k, m] : c) out += (out.empty() ? "" : " ") + ("[" + std::to_string(k) + ", " + std::to_string(m) + "]");
    return out;
}

const Census& published_type_census() {
    static const Census c{{2, 117}, {3, 38}, {4, 90}, {5, 16},  {6, 117}, {7, 15},  {8, 38},  {9, 13},
                          {10, 31}, {11, 10}, {12, 52}, {13, 4},  {14, 19}, {15, 14}, {16, 9},  {18, 27},
                          {20, 19}, {21, 14}, {22, 11}, {23, 22}, {24, 9},  {26, 5},  {28, 17}, {30, 15},
                          {31, 6},  {36, 12}, {40, 16}, {42, 12}, {46, 22}};
    return c;
}

const Census& published_exponent_census() {
    static const Census c{
        {6, 11},    {10, 4},    {12, 59},  {14, 3},   {15, 1},    {18, 47},   {20, 15},  {21, 2},   {22, 1},
        {24, 38},   {26, 1},    {30, 22},  {34, 1},   {36, 31},   {38, 1},    {39, 6},   {40, 6},   {42, 22},
        {46, 1},    {48, 4},    {50, 5},   {52, 2},   {54, 9},    {55, 4},    {57, 2},   {58, 1},   {60, 44},
        {62, 7},    {66, 4},    {68, 2},   {70, 3},   {72, 13},   {74, 1},    {78, 13},  {82, 1},   {84, 24},
        {86, 1},    {90, 9},    {93, 2},   {94, 1},   {100, 10},  {110, 4},   {111, 2},  {114, 2},  {116, 2},
        {120, 27},  {129, 2},   {136, 4},  {140, 6},  {148, 2},   {155, 4},   {156, 10}, {164, 2},  {168, 4},
        {171, 6},   {180, 12},  {186, 2},  {203, 6},  {205, 4},   {210, 4},   {222, 2},  {240, 3},  {253, 10},
        {258, 2},   {272, 8},   {301, 6},  {310, 4},  {328, 4},   {330, 16},  {333, 6},  {342, 6},  {360, 1},
        {406, 6},   {410, 4},   {420, 10}, {444, 4},  {465, 8},   {506, 10},  {602, 6},  {666, 6},  {812, 12},
        {820, 8},   {840, 3},   {903, 12}, {930, 8},  {1081, 22}, {1332, 12}, {1640, 16}, {1806, 12}, {2162, 22},
        {2520, 2}};
    return c;
}

const PublishedWordClaims& published_word_claims() {
    static const PublishedWordClaims c{
        {"Q(5,2)", "Q(5,3)", "Q(9,3)", "Q(13,4)", "Q(13,7)", "Q(17,3)", "Q(17,12)", "Q(25,4)", "Q(25,5)", "Q(25,6)",
         "Q(25,7)", "Q(25,8)", "Q(29,11)", "Q(29,16)", "Q(37,45)", "Q(37,5)", "Q(41,2)", "Q(41,3)", "Q(45,36)",
         "Q(45,37)"},
        {"aabaab", "abaaba", "abbabb"},
        202,
        117,
        55,
        4,
        {"aabab", "abaab", "ababa", "ababb", "abbab"},
        {"aaabab", "aababa", "aabbab", "aababb", "abaaab", "abaabb", "ababbb", "abbaba", "abbaab", "ababaa", "ababba",
         "abbbab"},
        {{"Q(8,2)", {"aababba", "abbbaba", "ababbaa", "aabbbab", "aaababb", "abaabbb", "abbaaab"}},
         {"Q(8,3)", {"aabbaba", "abbabaa", "ababbba", "aababbb", "aaabbab", "abaaabb", "abbbaab"}}}};
    return c;
}

std::vector<Check> check_dataset(const std::vector<DatasetEntry>& entries, bool types, bool exponents, bool scans) {
    std::vector<Check> out;
    const auto& claims = published_word_claims();
    const bool all_named = std::all_of(entries.begin(), entries.end(), [](const DatasetEntry& e) { return e.rig_id.has_value(); });

    if (types)
        out.push_back(timed("type census", [&](Check& c) {
            auto census = type_census(entries);
            c.detail = census_text(census);
            if (census != published_type_census()) fail(c, "got " + census_text(census) + ", expected " + census_text(published_type_census()));
        }));
    if (exponents)
        out.push_back(timed("exponent census", [&](Check& c) {
            auto census = exponent_census(entries, dataset_closure_cap);
            c.detail = census_text(census);
            if (census != published_exponent_census()) fail(c, "got " + census_text(census) + ", expected " + census_text(published_exponent_census()));
        }));
    if (!scans) return out;

    auto satisfying = [&](const std::string& word) {
        const Word w = Word::parse(word);
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (satisfies(entries[i].table, w).satisfied) idx.push_back(i);
        return idx;
    };
    auto names = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::string> v;
        for (auto i : idx) v.push_back(display_name(entries[i]));
        return v;
    };
    auto keis = [&](const std::vector<std::size_t>& idx) {
        return static_cast<std::size_t>(std::count_if(idx.begin(), idx.end(), [&](std::size_t i) { return is_kei(entries[i].table); }));
    };

    out.push_back(timed("abab scan", [&](Check& c) {
        auto idx = satisfying("abab");
        auto got = names(idx);
        c.detail = std::to_string(idx.size()) + " quandles, " + std::to_string(keis(idx)) + " keis: " + join(got);
        if (keis(idx) != 0) fail(c, "a kei satisfies abab");
        if (all_named) {
            std::set<std::string> a(got.begin(), got.end()), b(claims.abab_satisfiers.begin(), claims.abab_satisfiers.end());
            if (a != b) fail(c, "expected " + join(claims.abab_satisfiers));
        } else if (idx.size() != claims.abab_satisfiers.size()) {
            fail(c, "expected " + std::to_string(claims.abab_satisfiers.size()) + " quandles");
        }
    }));
    out.push_back(timed("length-6 kei triple", [&](Check& c) {
        std::vector<std::vector<std::size_t>> sets;
        for (const auto& w : claims.kei_triple) sets.push_back(satisfying(w));
        std::size_t total_keis = 0;
        for (const auto& e : entries) total_keis += is_kei(e.table);
        c.detail = std::to_string(sets[0].size()) + " quandles, " + std::to_string(keis(sets[0])) + " of " +
                   std::to_string(total_keis) + " keis";
        if (sets[1] != sets[0] || sets[2] != sets[0]) fail(c, "the three words have different satisfiers");
        if (sets[0].size() != claims.kei_triple_count) fail(c, "expected " + std::to_string(claims.kei_triple_count));
        if (total_keis != claims.kei_count || keis(sets[0]) != total_keis)
            fail(c, "expected all " + std::to_string(claims.kei_count) + " keis");
    }));
    out.push_back(timed("ababab scan", [&](Check& c) {
        auto idx = satisfying("ababab");
        c.detail = std::to_string(idx.size()) + " quandles, " + std::to_string(keis(idx)) + " keis";
        if (idx.size() != claims.ababab_count || keis(idx) != claims.ababab_keis)
            fail(c, "expected " + std::to_string(claims.ababab_count) + " quandles with " +
                        std::to_string(claims.ababab_keis) + " keis");
    }));
    out.push_back(timed("unsatisfied length 5 and 6 words", [&](Check& c) {
        std::vector<std::string> hits;
        for (const auto* list : {&claims.unsatisfied_length5, &claims.unsatisfied_length6})
            for (const auto& w : *list)
                for (auto i : satisfying(w)) hits.push_back(w + " by " + display_name(entries[i]));
        c.detail = std::to_string(claims.unsatisfied_length5.size() + claims.unsatisfied_length6.size()) + " words checked";
        if (!hits.empty()) fail(c, "satisfied: " + join(hits, ", "));
    }));
    out.push_back(timed("length-7 two-letter scan", [&](Check& c) {
        std::map<std::string, std::set<std::string>> got;
        for (const auto& w : enumerate_words(7, 2, WordFilter::nontrivial_candidates))
            for (auto i : satisfying(w.text())) got[display_name(entries[i])].insert(w.text());
        std::map<std::string, std::set<std::string>> expected;
        for (const auto& [q, ws] : claims.length7) expected[q] = {ws.begin(), ws.end()};
        std::vector<std::string> summary;
        for (const auto& [q, ws] : got) summary.push_back(q + ":" + std::to_string(ws.size()));
        c.detail = join(summary);
        if (all_named ? got != expected : got.size() != expected.size()) fail(c, "satisfying pairs differ from the published lists");
    }));
    return out;
}

// ---------------------------------------------------------------------------

Check check_length7_words() {
    return timed("length-7 words over Z_2[t]/(t^3+t^2+1) and Z_2[t]/(t^3+t+1)", [](Check& c) {
        const auto& claims = published_word_claims();
        const std::pair<const char*, const char*> cases[] = {{"poly:2:t^3+t^2+1:t", "Q(8,2)"}, {"poly:2:t^3+t+1:t", "Q(8,3)"}};
        const auto words = enumerate_words(7, 2, WordFilter::nontrivial_candidates);
        for (const auto& [spec, id] : cases) {
            const auto X = make(spec);
            std::set<std::string> got;
            for (const auto& w : words)
                if (satisfies(X, w).satisfied) got.insert(w.text());
            std::vector<std::string> list(got.begin(), got.end());
            c.detail += std::string(c.detail.empty() ? "" : "; ") + spec + " satisfies " + join(list, ",");
            const auto& published = claims.length7.at(id);
            if (got == std::set<std::string>(published.begin(), published.end())) continue;
            std::string note = std::string(spec) + " differs from the list published for " + id;
            for (const auto& [other, ws] : claims.length7)
                if (other != id && got == std::set<std::string>(ws.begin(), ws.end()))
                    note += " and equals the list published for " + other;
            c.status = Check::Status::fail;
            c.detail += " (" + note + ")";
        }
    });
}

Check check_abab_order5() {
    return timed("abab on connected quandles of order 5", [](Check& c) {
        const Word abab = Word::parse("abab");
        std::size_t non_kei = 0;
        for (const auto& X : enumerate_connected(5)) {
            if (is_kei(X)) continue;
            ++non_kei;
            if (!satisfies(X, abab).satisfied) fail(c, "a non-kei of order 5 fails abab");
        }
        if (non_kei != 2) fail(c, "expected 2 non-kei connected quandles of order 5, found " + std::to_string(non_kei));
        std::size_t keis = 0;
        std::vector<QuandleTable> connected;
        for (std::size_t n = 3; n <= 6; ++n)
            for (auto& X : enumerate_connected(n)) connected.push_back(std::move(X));
        for (const auto& q : full_corpus())
            if (q.table.order() >= 3 && is_connected(q.table)) connected.push_back(q.table);
        for (const auto& X : connected) {
            if (!is_kei(X)) continue;
            ++keis;
            if (satisfies(X, abab).satisfied) fail(c, "a connected kei satisfies abab");
        }
        c.detail = std::to_string(non_kei) + " non-keis satisfy abab; " + std::to_string(keis) + " connected keis do not";
    });
}

Check check_theorem_i() {
    return timed("boundary of L_S vanishes", [](Check& c) {
        const auto words = candidate_words(7);
        std::uint64_t cycles = 0, pairs = 0;
        for (const auto& q : theorem_corpus()) {
            const auto& X = q.table;
            const std::size_t n = X.order();
            for (const auto& w : words) {
                if (!satisfies(X, w).satisfied) continue;
                ++pairs;
                for (Element x = 0; x < static_cast<Element>(n); ++x)
                    for_each_tuple(n, w.alphabet(), [&](const std::vector<Element>& ys) {
                        ++cycles;
                        if (!boundary(X, cycle_LS(X, w, {x, ys})).is_zero()) {
                            fail(c, q.name + " " + w.text() + " at x=" + std::to_string(x + 1));
                            return false;
                        }
                        return true;
                    });
            }
        }
        if (c.status == Check::Status::pass)
            c.detail = std::to_string(pairs) + " (quandle, word) pairs, " + std::to_string(cycles) + " cycles";
    });
}

Check check_theorem_ii() {
    return timed("extension satisfies aa iff the cocycle vanishes on L_S (dihedral 3, Z_3)", [](Check& c) {
        const auto X = dihedral(3);
        const std::uint64_t d = 3;
        auto space = cocycle_space(X, d, Mode::quandle);
        std::set<std::vector<std::vector<std::int64_t>>> solved, brute;
        const auto members = space.members();
        for (const auto& phi : members) solved.insert(phi.values);
        CocycleTable phi = CocycleTable::zero(3, d);
        for (std::uint64_t code = 0; code < 19683; ++code) {
            std::uint64_t k = code;
            for (std::size_t i = 0; i < 9; ++i, k /= 3) phi.values[i / 3][i % 3] = static_cast<std::int64_t>(k % 3);
            if (is_cocycle(X, phi, Mode::quandle)) brute.insert(phi.values);
        }
        if (solved != brute)
            fail(c, "linear solve found " + std::to_string(solved.size()) + " cocycles, brute force " + std::to_string(brute.size()));
        const Word aa = Word::parse("aa");
        std::size_t agree = 0, satisfying = 0;
        for (const auto& m : members) {
            auto r = verify_theorem_ii({X, d, m, Mode::quandle}, aa);
            agree += r.agree;
            satisfying += r.extension_satisfies;
        }
        if (agree != members.size()) fail(c, std::to_string(members.size() - agree) + " cocycles disagree");
        if (c.status == Check::Status::pass)
            c.detail = std::to_string(members.size()) + " cocycles, " + std::to_string(satisfying) + " extensions are keis";
    });
}

Check check_theorem_iii() {
    return timed("identity generators close under the boundary", [](Check& c) {
        const auto words = candidate_words(4);
        std::uint64_t checked = 0;
        for (const auto& q : small_corpus()) {
            const auto& X = q.table;
            for (const auto& w : words) {
                if (!satisfies(X, w).satisfied) continue;
                std::optional<Lattice> lower;
                for (std::size_t deg = 2; deg <= 4; ++deg) {
                    const auto gens = subcomplex_generators(X, SubcomplexKind::identity(w), deg);
                    for (const auto& g : gens.chains) {
                        ++checked;
                        const auto b = boundary(X, g);
                        const bool ok = deg == 2 ? b.is_zero() : lower->contains(b.to_sparse(X.order()));
                        if (!ok) {
                            fail(c, q.name + " " + w.text() + " degree " + std::to_string(deg));
                            return;
                        }
                    }
                    lower = span_lattice(X, gens);
                }
            }
        }
        c.detail = std::to_string(checked) + " generators";
    });
}

Check check_lemmas() {
    return timed("word lemmas on the corpus", [](Check& c) {
        const auto corpus = full_corpus();
        std::uint64_t single = 0, shaped = 0;
        for (std::size_t k = 1; k <= 5; ++k)
            for (std::size_t m = 1; m <= k; ++m)
                for (const auto& w : enumerate_words(k, m, WordFilter::all)) {
                    if (!lemma_trivial(w)) continue;
                    ++single;
                    for (const auto& q : corpus)
                        if (rack_type(q.table) != 1 && satisfies(q.table, w).satisfied)
                            fail(c, q.name + " is nontrivial and satisfies " + w.text());
                }
        for (std::size_t k = 2; k <= 7; ++k)
            for (const auto& w : enumerate_words(k, 2, WordFilter::all)) {
                auto bound = lemma_type_bound(w);
                if (!bound) continue;
                ++shaped;
                for (const auto& q : corpus)
                    if (satisfies(q.table, w).satisfied && *bound % rack_type(q.table) != 0)
                        fail(c, q.name + " satisfies " + w.text() + " with type above " + std::to_string(*bound));
            }
        if (c.status == Check::Status::pass)
            c.detail = std::to_string(single) + " single-occurrence words, " + std::to_string(shaped) + " shaped words";
    });
}

Check check_burnside() {
    return timed("repetition identities on the polynomial family", [](Check& c) {
        const std::size_t params[][3] = {{1, 2, 3}, {1, 3, 5}, {2, 2, 3}, {2, 3, 5}};
        for (const auto& p : params) {
            const auto X = burnside_family(p[0], p[1], p[2]);
            std::vector<int> letters(p[0]);
            for (std::size_t i = 0; i < p[0]; ++i) letters[i] = static_cast<int>(i);
            const Word w = Word::from_letters(letters).repeated(p[1]);
            const std::string tag = "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + ")";
            if (!is_connected(X)) fail(c, tag + " not connected");
            if (!satisfies(X, w).satisfied) fail(c, tag + " fails " + w.text());
            c.detail += (c.detail.empty() ? "" : ", ") + tag + " order " + std::to_string(X.order());
        }
    });
}

Check check_medial() {
    return timed("medial cycles", [](Check& c) {
        std::uint64_t quadruples = 0;
        for (const auto& q : full_corpus()) {
            const auto& X = q.table;
            if (!is_medial(X)) continue;
            const std::size_t n = X.order();
            for_each_tuple(n, 4, [&](const std::vector<Element>& t) {
                ++quadruples;
                if (!boundary(X, medial_LS(X, t[0], t[1], t[2], t[3])).is_zero()) {
                    fail(c, q.name + " has a medial cycle with nonzero boundary");
                    return false;
                }
                return true;
            });
        }
        const auto X = dihedral(3);
        std::size_t vanishing = 0;
        for (std::uint64_t d : {2, 3, 4}) {
            for (const auto& phi : cocycle_space(X, d, Mode::quandle).members()) {
                bool vanishes = true;
                for_each_tuple(3, 4, [&](const std::vector<Element>& t) {
                    vanishes = evaluate_cocycle(phi, medial_LS(X, t[0], t[1], t[2], t[3])) == 0;
                    return vanishes;
                });
                if (!vanishes) continue;
                ++vanishing;
                if (!is_medial(extend({X, d, phi, Mode::quandle}))) fail(c, "non-medial extension of dihedral(3) mod " + std::to_string(d));
            }
        }
        if (c.status == Check::Status::pass)
            c.detail = std::to_string(quadruples) + " quadruples, " + std::to_string(vanishing) + " vanishing cocycles";
    });
}

}  // namespace quandle

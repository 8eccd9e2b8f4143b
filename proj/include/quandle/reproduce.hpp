#pragma once

// Reproduction harness: the built-in corpora, the census over a directory of
// connected-quandle matrices, and the identity/homology checks that the CLI
// `reproduce` command runs.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/identities.hpp"
#include "quandle/io.hpp"

namespace quandle {

class MissingDataset : public Error {
public:
    using Error::Error;
};

struct Check {
    enum class Status { pass, fail, skipped };
    std::string name;
    Status status = Status::pass;
    std::string detail;
    double seconds = 0;
};

std::string to_string(Check::Status s);

struct NamedQuandle {
    std::string name;
    QuandleTable table;
};

/// Constructions used for the identity-to-cycle checks (orders 1 to 9).
std::vector<NamedQuandle> theorem_corpus();

/// Quandles of order at most 5: trivial, dihedral, Alexander and every
/// connected one, with no two isomorphic members.
std::vector<NamedQuandle> small_corpus();

/// theorem_corpus() and small_corpus() merged, isomorphic duplicates dropped
/// for orders <= 6.
std::vector<NamedQuandle> full_corpus();

/// Satisfying x aa = x: type divides 2.
bool is_kei(const QuandleTable& X);

// ---------------------------------------------------------------------------
// Dataset census

struct DatasetEntry {
    std::string name;                                     // file stem
    std::optional<std::pair<unsigned, unsigned>> rig_id;  // (n, i) when the stem ends in two numbers
    std::string digest;
    QuandleTable table;
};

/// Every regular file in dir, parsed as a matrix. Sorted by (order, index) when
/// ids are present, then by name.
std::vector<DatasetEntry> load_dataset(const std::string& dir, Convention convention);

std::string rig_name(std::pair<unsigned, unsigned> id);  // "Q(5,2)"
std::string display_name(const DatasetEntry& e);

using Census = std::map<std::uint64_t, std::size_t>;

Census type_census(const std::vector<DatasetEntry>& entries);
Census exponent_census(const std::vector<DatasetEntry>& entries, std::size_t closure_cap);
std::string census_text(const Census& c);  // "[2, 117] [3, 38]"

const Census& published_type_census();
const Census& published_exponent_census();

struct PublishedWordClaims {
    std::vector<std::string> abab_satisfiers;             // names "Q(n,i)"
    std::vector<std::string> kei_triple;                  // three words satisfied by the same quandles
    std::size_t kei_triple_count;
    std::size_t kei_count;
    std::size_t ababab_count;
    std::size_t ababab_keis;
    std::vector<std::string> unsatisfied_length5;
    std::vector<std::string> unsatisfied_length6;
    std::map<std::string, std::vector<std::string>> length7;  // "Q(8,2)" -> words
};

const PublishedWordClaims& published_word_claims();

inline constexpr std::size_t dataset_closure_cap = 8'000'000;

/// Census and scan checks over a loaded dataset.
std::vector<Check> check_dataset(const std::vector<DatasetEntry>& entries, bool types, bool exponents, bool scans);

// ---------------------------------------------------------------------------
// Built-in checks

Check check_length7_words();
Check check_abab_order5();
Check check_theorem_i();
Check check_theorem_ii();
Check check_theorem_iii();
Check check_lemmas();
Check check_burnside();
Check check_medial();

}  // namespace quandle

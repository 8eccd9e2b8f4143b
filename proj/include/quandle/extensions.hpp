#pragma once

// Abelian extensions E(X, Z_d, phi) and the checks built on them: the
// identity-inheritance equivalence and the type comparisons for connected
// extensions and inner representations.

#include <optional>
#include <string>
#include <vector>

#include "quandle/homology.hpp"
#include "quandle/identities.hpp"

namespace quandle {

class InvalidCocycle : public Error {
public:
    using Error::Error;
};

class BaseDoesNotSatisfy : public Error {
public:
    using Error::Error;
};

struct ExtensionSpec {
    QuandleTable base;
    std::uint64_t modulus;  // d >= 1
    CocycleTable cocycle;
    Mode mode = Mode::quandle;  // quandle mode requires phi(x,x) = 0
};

/// Zero cocycle extension spec, in quandle mode when the base is a quandle.
ExtensionSpec trivial_extension(const QuandleTable& base, std::uint64_t modulus);

/// Table on n*d elements, (x, a) at index x*d + a, (x,a)*(y,b) = (x*y, a + phi(x,y)).
QuandleTable extend(const ExtensionSpec& spec);

inline Element pair_index(std::uint64_t modulus, Element x, std::int64_t a) {
    return static_cast<Element>(static_cast<std::uint64_t>(x) * modulus + static_cast<std::uint64_t>(a));
}

struct TheoremIIReport {
    bool extension_satisfies = false;
    bool cocycle_vanishes = false;  // phi(L_S) = 0 for every assignment
    bool agree = false;
    std::optional<Assignment> extension_witness;  // in E's elements
    std::optional<Assignment> nonvanishing_assignment;  // in X's elements
    std::int64_t nonvanishing_value = 0;
};

TheoremIIReport verify_theorem_ii(const ExtensionSpec& spec, const Word& w);

struct ConjectureEntry {
    enum class Status { match, mismatch, skipped_not_connected };
    Status status;
    std::uint64_t base_type = 0;
    std::uint64_t extension_type = 0;
    std::size_t extension_order = 0;
};

struct ConjectureReport {
    std::vector<ConjectureEntry> extensions;
    std::uint64_t base_type = 0;
    std::uint64_t inner_image_type = 0;
    std::size_t inner_image_order = 0;
    bool base_connected = false;
    bool inner_types_equal = false;
    std::size_t matches = 0, mismatches = 0, skipped = 0;
};

/// Reports the type comparisons; never asserts them.
ConjectureReport conjecture_harness(const QuandleTable& X, const std::vector<ExtensionSpec>& specs);

std::string to_string(ConjectureEntry::Status s);

}  // namespace quandle

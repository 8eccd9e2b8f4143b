#pragma once

// Finite racks and quandles stored as operation tables, right translations,
// the inner automorphism group and the scalar invariants built on them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace quandle {

using Element = std::int32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { rack, quandle };

enum class Axiom { out_of_range_entry, column_not_bijective, self_distributivity_fails, idempotency_fails };

std::string to_string(Axiom axiom);

/// A failed axiom together with the elements that exhibit the failure.
///   out_of_range_entry:        (x, y)
///   column_not_bijective:      (y)
///   self_distributivity_fails: (a, b, c)
///   idempotency_fails:         (x)
struct Violation {
    Axiom axiom;
    std::vector<Element> witness;

    std::string describe() const;
};

class ValidationError : public Error {
public:
    explicit ValidationError(Violation v);
    const Violation& violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

class ClosureBudgetExceeded : public Error {
public:
    using Error::Error;
};

class InnQuandleIllDefined : public Error {
public:
    using Error::Error;
};

/// Row-major raw input: raw[x][y] is meant to be x*y.
using RawTable = std::vector<std::vector<long long>>;

std::optional<Violation> check_axioms(const RawTable& raw, Mode mode);

/// An immutable, validated rack. Storage is column-major so that the right
/// translation R_y is a contiguous span.
class QuandleTable {
public:
    /// Throws ValidationError when raw is not a rack (or not a quandle in quandle mode).
    static QuandleTable from_rows(const RawTable& raw, Mode mode = Mode::rack);

    /// Builds from a function op(x, y) on {0..n-1}; validates like from_rows.
    template <class Op>
    static QuandleTable from_operation(std::size_t n, Op op, Mode mode = Mode::rack) {
        RawTable raw(n, std::vector<long long>(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) raw[x][y] = static_cast<long long>(op(x, y));
        return from_rows(raw, mode);
    }

    std::size_t order() const noexcept { return n_; }
    bool is_quandle() const noexcept { return quandle_; }

    Element op(Element x, Element y) const noexcept {
        return cols_[static_cast<std::size_t>(y) * n_ + static_cast<std::size_t>(x)];
    }
    std::span<const Element> column(Element y) const noexcept {
        return {cols_.data() + static_cast<std::size_t>(y) * n_, n_};
    }
    bool contains(long long e) const noexcept { return e >= 0 && static_cast<std::size_t>(e) < n_; }

    std::vector<std::vector<Element>> rows() const;
    RawTable raw() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const QuandleTable& a, const QuandleTable& b) {
        return a.n_ == b.n_ && a.cols_ == b.cols_;
    }

private:
    QuandleTable() = default;

    std::size_t n_ = 0;
    std::vector<Element> cols_;
    bool quandle_ = false;
    std::vector<std::string> labels_;
};

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Element> images);  // throws Error if not a bijection
    static Permutation identity(std::size_t n);

    std::size_t degree() const noexcept { return images_.size(); }
    Element operator()(Element x) const noexcept { return images_[static_cast<std::size_t>(x)]; }
    std::span<const Element> images() const noexcept { return images_; }

    /// x -> next(this(x))
    Permutation then(const Permutation& next) const;
    Permutation inverse() const;
    bool is_identity() const;
    std::uint64_t order() const;
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Element> images_;
};

struct PermutationGroup {
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // lexicographic on image arrays

    std::size_t order() const noexcept { return elements.size(); }
};

inline constexpr std::size_t default_closure_cap = 1'000'000;

struct InvariantReport {
    bool is_rack = false;
    bool is_quandle = false;
    bool is_connected = false;
    bool is_medial = false;
    bool is_faithful = false;
    std::uint64_t type = 0;
    std::uint64_t inn_order = 0;
    std::uint64_t inn_exponent = 0;
    std::optional<Violation> violation;
};

/// Validates raw data. With strict set, a violation throws ValidationError;
/// otherwise the report carries it and only is_rack / is_quandle are meaningful.
InvariantReport validate(const RawTable& raw, Mode mode, bool strict = true,
                         std::size_t closure_cap = default_closure_cap);

Permutation translate(const QuandleTable& X, Element b);

/// Left-associated product x y_1 y_2 ... y_k.
Element product(const QuandleTable& X, Element x, std::span<const Element> ys);

PermutationGroup inner_group(const QuandleTable& X, std::size_t cap = default_closure_cap);

std::uint64_t group_exponent(const PermutationGroup& G);

struct InnerSummary {
    std::uint64_t order = 0;
    std::uint64_t exponent = 0;
};

/// Order and exponent of Inn(X) without materializing Permutation objects;
/// elements are stored as packed byte arrays, so this reaches groups of a few
/// million elements. Requires order(X) <= 256.
InnerSummary inner_summary(const QuandleTable& X, std::size_t cap = default_closure_cap);

std::uint64_t rack_type(const QuandleTable& X);
bool is_connected(const QuandleTable& X);
bool is_faithful(const QuandleTable& X);

/// (x, y, u, v) with (x*y)*(u*v) != (x*u)*(y*v), if any.
std::optional<std::vector<Element>> mediality_witness(const QuandleTable& X);
inline bool is_medial(const QuandleTable& X) { return !mediality_witness(X).has_value(); }

InvariantReport invariants(const QuandleTable& X, std::size_t closure_cap = default_closure_cap);

struct InnerRepresentation {
    QuandleTable image;
    std::vector<Element> map;  // X -> image, image elements numbered by first occurrence
};

InnerRepresentation inner_representation(const QuandleTable& X);

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

}  // namespace quandle

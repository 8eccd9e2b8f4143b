#pragma once

// Rack chain groups C_n(X): formal integer combinations of n-tuples, the two
// face maps, the boundary, the 2-cycles attached to identities, and the
// generators of the degenerate and identity subcomplexes.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quandle/core.hpp"
#include "quandle/identities.hpp"
#include "quandle/normal_form.hpp"

namespace quandle {

using Tuple = std::vector<Element>;

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class IdentityNotSatisfied : public Error {
public:
    using Error::Error;
};

class NotMedial : public Error {
public:
    using Error::Error;
};

class DegreeTooSmall : public Error {
public:
    using Error::Error;
};

class SizeGuardExceeded : public Error {
public:
    using Error::Error;
};

/// Chain operations refuse degrees whose tuple basis exceeds this many elements.
inline constexpr std::uint64_t default_basis_guard = 200'000;

/// n^degree, throwing SizeGuardExceeded past the guard.
std::uint64_t basis_size(std::size_t order, std::size_t degree, std::uint64_t guard = default_basis_guard);

/// Lexicographic position of a tuple in the basis of C_degree.
std::size_t tuple_index(std::size_t order, const Tuple& t);
Tuple tuple_at(std::size_t order, std::size_t degree, std::size_t index);

class FormalChain {
public:
    FormalChain() = default;
    explicit FormalChain(std::size_t degree) : degree_(degree) {}

    std::size_t degree() const noexcept { return degree_; }
    const std::map<Tuple, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t coefficient(const Tuple& t) const;

    /// Adds coef * t; zero results are erased. Throws on overflow.
    void add(const Tuple& t, std::int64_t coef = 1);
    FormalChain& operator+=(const FormalChain& other);
    FormalChain& operator-=(const FormalChain& other);
    FormalChain operator-() const;
    friend FormalChain operator+(FormalChain a, const FormalChain& b) { return a += b; }
    friend FormalChain operator-(FormalChain a, const FormalChain& b) { return a -= b; }

    friend bool operator==(const FormalChain&, const FormalChain&) = default;

    /// Coordinates in the lexicographic tuple basis.
    SparseVector to_sparse(std::size_t order) const;
    static FormalChain from_sparse(std::size_t order, std::size_t degree, const SparseVector& v);

    /// "1 * (1,2) - 2 * (3,1)" with 1-based element labels; "0" for the zero chain.
    std::string to_text() const;

private:
    std::size_t degree_ = 0;
    std::map<Tuple, std::int64_t> terms_;
};

enum class FaceKind { d, delta };

/// d_h deletes entry h; delta_h acts by *x_h on entries 1..h-1, then deletes entry h. h is 1-based.
Tuple face(const QuandleTable& X, const Tuple& t, std::size_t h, FaceKind kind);

/// Linear extension of one face map.
FormalChain face(const QuandleTable& X, const FormalChain& c, std::size_t h, FaceKind kind);

/// sum_{h=2}^{n} (-1)^h (d_h - delta_h)
FormalChain boundary(const QuandleTable& X, const FormalChain& c);

enum class Strictness { strict, permissive };

/// L_S = sum_{i=0}^{k-1} (x w_i, y_tau(i+1)), w_i the length-i prefix product.
FormalChain cycle_LS(const QuandleTable& X, const Word& w, const Assignment& a,
                     Strictness strictness = Strictness::strict);

/// [(x,y) + (x*y, u*v)] - [(x,u) + (x*u, y*v)]
FormalChain medial_LS(const QuandleTable& X, Element x, Element y, Element u, Element v,
                      Strictness strictness = Strictness::strict);

struct SubcomplexKind {
    enum class Tag { degenerate, identity } tag = Tag::degenerate;
    Word word;                 // identity only
    bool include_j0 = false;   // identity only: also put the y slot in position 1

    static SubcomplexKind degenerate() { return {}; }
    static SubcomplexKind identity(Word w, bool include_j0 = false) {
        return {Tag::identity, std::move(w), include_j0};
    }
};

struct GeneratorProvenance {
    std::size_t j = 0;       // 0-based position of the y slot minus one (y sits at tuple position j+1, 1-based)
    Tuple xs;                // the x entries, in tuple order, excluding the y slot
    std::vector<Element> ys; // values of y_1..y_m
};

struct GeneratorSet {
    std::size_t degree = 0;
    SubcomplexKind kind;
    std::vector<FormalChain> chains;
    std::vector<GeneratorProvenance> provenance;
};

/// The identity generator at y-slot position j+1 (1-based, 1 <= j <= n-1; j = 0 puts y first):
/// sum_{i=0}^{k-1} (x_1 w_i, ..., x_j w_i, y_tau(i+1), x_{j+2}, ..., x_n).
FormalChain identity_generator(const QuandleTable& X, const Word& w, std::size_t j, const Tuple& xs,
                               const std::vector<Element>& ys);

GeneratorSet subcomplex_generators(const QuandleTable& X, const SubcomplexKind& kind, std::size_t degree,
                                   std::uint64_t guard = default_basis_guard);

/// Integer lattice spanned by a generator set, in tuple coordinates.
Lattice span_lattice(const QuandleTable& X, const GeneratorSet& gens);

bool in_span(const QuandleTable& X, const FormalChain& c, const GeneratorSet& gens);

}  // namespace quandle

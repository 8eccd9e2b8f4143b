#pragma once

// Boundary matrices of the rack, quandle, degenerate and identity complexes,
// their homology, and 2-cocycles with coefficients in Z_d.

#include <cstdint>
#include <string>
#include <vector>

#include "quandle/chains.hpp"
#include "quandle/normal_form.hpp"

namespace quandle {

class SubcomplexClosureViolated : public Error {
public:
    SubcomplexClosureViolated(const std::string& what, FormalChain witness)
        : Error(what), witness_(std::move(witness)) {}
    const FormalChain& witness() const noexcept { return witness_; }

private:
    FormalChain witness_;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

struct ComplexKind {
    enum class Tag { rack, quandle, degenerate, identity } tag = Tag::rack;
    Word word;  // identity only

    static ComplexKind rack() { return {Tag::rack, {}}; }
    static ComplexKind quandle() { return {Tag::quandle, {}}; }
    static ComplexKind degenerate() { return {Tag::degenerate, {}}; }
    static ComplexKind identity(Word w) { return {Tag::identity, std::move(w)}; }

    std::string name() const;
};

/// A basis of one chain group. For tuple-based complexes the basis is the
/// tuple list; for the identity complex each basis element is a lattice
/// vector in lexicographic tuple coordinates.
struct ChainBasis {
    std::size_t degree = 0;
    std::vector<Tuple> tuples;
    std::vector<SparseVector> lattice;
    bool lattice_based = false;

    std::size_t size() const noexcept { return lattice_based ? lattice.size() : tuples.size(); }
    FormalChain element(std::size_t order, std::size_t i) const;
};

/// Row i is the boundary of source basis element i in target coordinates.
struct BoundaryMatrix {
    SparseMatrix matrix;
    ChainBasis source;  // degree n
    ChainBasis target;  // degree n-1
};

struct HomologyOptions {
    std::uint64_t basis_guard = default_basis_guard;
    bool enforce_degree_guard = true;
};

/// Highest homology degree computed by default: 4 up to order 8, 3 up to 16, 2 beyond.
std::size_t default_max_homology_degree(std::size_t order);

ChainBasis chain_basis(const QuandleTable& X, const ComplexKind& complex, std::size_t degree,
                       const HomologyOptions& opts = {});

BoundaryMatrix boundary_matrix(const QuandleTable& X, const ComplexKind& complex, std::size_t degree,
                               const HomologyOptions& opts = {});

struct HomologyGroup {
    std::uint64_t free_rank = 0;
    std::vector<BigInt> torsion;  // factors > 1, each dividing the next

    std::string to_string() const;  // "Z^2 ⊕ Z_3", "0" for the trivial group
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup homology(const QuandleTable& X, const ComplexKind& complex, std::size_t degree,
                       const HomologyOptions& opts = {});

/// Quandle homology from full tuple bases with the degenerate generators
/// stacked into the presentation, no quotient basis involved.
HomologyGroup quandle_homology_stacked(const QuandleTable& X, std::size_t degree, const HomologyOptions& opts = {});

// ---------------------------------------------------------------------------

struct CocycleTable {
    std::uint64_t modulus = 0;  // 0 means integer coefficients
    std::vector<std::vector<std::int64_t>> values;  // values[x][y] = phi(x, y)

    static CocycleTable zero(std::size_t order, std::uint64_t modulus);
    std::int64_t operator()(Element x, Element y) const {
        return values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
    friend bool operator==(const CocycleTable&, const CocycleTable&) = default;
};

/// phi(x,y) - phi(x,z) + phi(x*y,z) - phi(x*z,y*z) == 0 everywhere (and phi(x,x) == 0 in quandle mode).
bool is_cocycle(const QuandleTable& X, const CocycleTable& phi, Mode mode);

/// Rows are the constraints, columns the unknowns phi(x,y) at index x*n + y.
IntegerMatrix cocycle_constraints(const QuandleTable& X, Mode mode);

struct CocycleSpace {
    std::size_t order = 0;  // of the underlying rack
    std::uint64_t modulus = 0;
    std::vector<CocycleTable> generators;
    std::vector<std::uint64_t> generator_orders;  // the space is the direct sum of the cyclic groups they generate
    BigInt cardinality;

    /// Every member, enumerated mixed-radix over the generators. Throws when cardinality exceeds limit.
    std::vector<CocycleTable> members(std::uint64_t limit = 1'000'000) const;
};

CocycleSpace cocycle_space(const QuandleTable& X, std::uint64_t modulus, Mode mode);

/// sum coef * phi(tuple), reduced mod the modulus when it is nonzero.
std::int64_t evaluate_cocycle(const CocycleTable& phi, const FormalChain& c);

/// delta f (x, y) = f(x) - f(x*y)
CocycleTable coboundary(const QuandleTable& X, const std::vector<std::int64_t>& f, std::uint64_t modulus);

}  // namespace quandle

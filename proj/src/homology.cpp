#include "quandle/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quandle {

std::string ComplexKind::name() const {
    switch (tag) {
        case Tag::rack: return "rack";
        case Tag::quandle: return "quandle";
        case Tag::degenerate: return "degenerate";
        case Tag::identity: return "identity(" + word.text() + ")";
    }
    return "?";
}

FormalChain ChainBasis::element(std::size_t order, std::size_t i) const {
    if (lattice_based) return FormalChain::from_sparse(order, degree, lattice.at(i));
    FormalChain c(degree);
    c.add(tuples.at(i));
    return c;
}

std::size_t default_max_homology_degree(std::size_t order) {
    if (order <= 8) return 4;
    if (order <= 16) return 3;
    return 2;
}

namespace {

bool is_degenerate(const Tuple& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

ChainBasis chain_basis(const QuandleTable& X, const ComplexKind& complex, std::size_t degree,
                       const HomologyOptions& opts) {
    ChainBasis b;
    b.degree = degree;
    if (degree == 0) return b;
    const std::size_t n = X.order();
    if (complex.tag == ComplexKind::Tag::identity) {
        b.lattice_based = true;
        if (degree < 2) return b;
        auto gens = subcomplex_generators(X, SubcomplexKind::identity(complex.word), degree, opts.basis_guard);
        auto L = span_lattice(X, gens);
        b.lattice = L.basis();
        return b;
    }
    const auto size = static_cast<std::size_t>(basis_size(n, degree, opts.basis_guard));
    for (std::size_t i = 0; i < size; ++i) {
        Tuple t = tuple_at(n, degree, i);
        const bool degenerate = is_degenerate(t);
        if (complex.tag == ComplexKind::Tag::rack || (complex.tag == ComplexKind::Tag::quandle && !degenerate) ||
            (complex.tag == ComplexKind::Tag::degenerate && degenerate))
            b.tuples.push_back(std::move(t));
    }
    return b;
}

BoundaryMatrix boundary_matrix(const QuandleTable& X, const ComplexKind& complex, std::size_t degree,
                               const HomologyOptions& opts) {
    if (degree == 0) throw DegreeTooSmall("boundary matrices start at degree 1");
    if (complex.tag != ComplexKind::Tag::rack && complex.tag != ComplexKind::Tag::identity && !X.is_quandle())
        throw Error(complex.name() + " complex requires a quandle");
    BoundaryMatrix bm;
    bm.source = chain_basis(X, complex, degree, opts);
    bm.target = chain_basis(X, complex, degree - 1, opts);
    bm.matrix.cols = bm.target.size();
    bm.matrix.rows.reserve(bm.source.size());
    const std::size_t n = X.order();

    if (complex.tag == ComplexKind::Tag::identity) {
        Lattice target(degree > 1 ? static_cast<std::size_t>(basis_size(n, degree - 1, opts.basis_guard)) : 1);
        for (const auto& v : bm.target.lattice) target.add(v);
        for (std::size_t i = 0; i < bm.source.size(); ++i) {
            FormalChain d = boundary(X, bm.source.element(n, i));
            SparseVector row;
            if (!d.is_zero()) {
                auto coords = target.coordinates(d.to_sparse(n));
                if (!coords)
                    throw SubcomplexClosureViolated("boundary of an identity-subcomplex basis element leaves the subcomplex",
                                                    std::move(d));
                for (std::size_t j = 0; j < coords->size(); ++j)
                    if ((*coords)[j] != 0) row.entries.emplace_back(j, (*coords)[j]);
            }
            bm.matrix.rows.push_back(std::move(row));
        }
        return bm;
    }

    std::vector<std::size_t> position;
    if (degree > 1) {
        position.assign(static_cast<std::size_t>(basis_size(n, degree - 1, opts.basis_guard)), npos);
        for (std::size_t j = 0; j < bm.target.tuples.size(); ++j)
            position[tuple_index(n, bm.target.tuples[j])] = j;
    }
    for (const auto& t : bm.source.tuples) {
        SparseVector row;
        if (degree > 1) {
            FormalChain src(degree);
            src.add(t);
            const FormalChain d = boundary(X, src);
            for (const auto& [ft, c] : d.terms()) {
                const std::size_t p = position[tuple_index(n, ft)];
                if (p == npos) {
                    if (complex.tag == ComplexKind::Tag::degenerate)
                        throw SubcomplexClosureViolated("boundary of a degenerate tuple leaves the degenerate subcomplex", d);
                    continue;  // quandle complex: degenerate tuples are zero in the quotient
                }
                row.entries.emplace_back(p, BigInt(static_cast<long>(c)));
            }
            std::sort(row.entries.begin(), row.entries.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        bm.matrix.rows.push_back(std::move(row));
    }
    return bm;
}

std::string HomologyGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.emplace_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& t : torsion) parts.push_back("Z_" + t.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
    return s;
}

namespace {

void check_degree_guard(const QuandleTable& X, std::size_t degree, const HomologyOptions& opts) {
    if (degree == 0) throw DegreeTooSmall("homology starts at degree 1");
    if (opts.enforce_degree_guard && degree > default_max_homology_degree(X.order()))
        throw SizeGuardExceeded("H_" + std::to_string(degree) + " of an order-" + std::to_string(X.order()) +
                                " rack is beyond the default degree guard");
}

HomologyGroup assemble(std::uint64_t dim, std::size_t rank_out, const EliminationResult& in) {
    HomologyGroup h;
    h.free_rank = dim - rank_out - in.rank;
    for (const auto& f : in.invariant_factors)
        if (f > 1) h.torsion.push_back(f);
    return h;
}

SparseMatrix unit_rows(std::size_t order, const std::vector<Tuple>& tuples, std::size_t cols) {
    SparseMatrix m;
    m.cols = cols;
    for (const auto& t : tuples) m.rows.push_back(SparseVector{{{tuple_index(order, t), BigInt(1)}}});
    return m;
}

SparseMatrix stack(SparseMatrix a, const SparseMatrix& b) {
    a.rows.insert(a.rows.end(), b.rows.begin(), b.rows.end());
    return a;
}

}  // namespace

HomologyGroup homology(const QuandleTable& X, const ComplexKind& complex, std::size_t degree,
                       const HomologyOptions& opts) {
    check_degree_guard(X, degree, opts);
    auto out = boundary_matrix(X, complex, degree, opts);
    auto in = boundary_matrix(X, complex, degree + 1, opts);
    const auto rank_out = sparse_invariant_factors(out.matrix).rank;
    return assemble(out.source.size(), rank_out, sparse_invariant_factors(in.matrix));
}

HomologyGroup quandle_homology_stacked(const QuandleTable& X, std::size_t degree, const HomologyOptions& opts) {
    check_degree_guard(X, degree, opts);
    if (!X.is_quandle()) throw Error("quandle homology requires a quandle");
    const std::size_t n = X.order();
    auto rack_out = boundary_matrix(X, ComplexKind::rack(), degree, opts);
    auto rack_in = boundary_matrix(X, ComplexKind::rack(), degree + 1, opts);
    const auto dn = chain_basis(X, ComplexKind::degenerate(), degree, opts).tuples;
    const auto dn_1 = chain_basis(X, ComplexKind::degenerate(), degree - 1, opts).tuples;

    // rank of C_n -> C_{n-1}/D_{n-1}
    const auto r_out = sparse_invariant_factors(stack(rack_out.matrix, unit_rows(n, dn_1, rack_out.matrix.cols))).rank -
                       dn_1.size();
    // C_n / (im d_{n+1} + D_n)
    auto coker = sparse_invariant_factors(stack(rack_in.matrix, unit_rows(n, dn, rack_in.matrix.cols)));
    EliminationResult in;
    in.rank = coker.rank - dn.size();
    in.invariant_factors = coker.invariant_factors;
    return assemble(rack_out.source.size() - dn.size(), r_out, in);
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t reduce(__int128 v, std::uint64_t modulus) {
    if (modulus == 0) {
        if (v > INT64_MAX || v < INT64_MIN) throw Error("cocycle value overflow");
        return static_cast<std::int64_t>(v);
    }
    const auto m = static_cast<__int128>(modulus);
    return static_cast<std::int64_t>(((v % m) + m) % m);
}

}  // namespace

CocycleTable CocycleTable::zero(std::size_t order, std::uint64_t modulus) {
    return {modulus, std::vector<std::vector<std::int64_t>>(order, std::vector<std::int64_t>(order, 0))};
}

bool is_cocycle(const QuandleTable& X, const CocycleTable& phi, Mode mode) {
    const auto n = static_cast<Element>(X.order());
    if (phi.values.size() != X.order()) return false;
    for (const auto& row : phi.values)
        if (row.size() != X.order()) return false;
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z) {
                __int128 s = static_cast<__int128>(phi(x, y)) - phi(x, z) + phi(X.op(x, y), z) - phi(X.op(x, z), X.op(y, z));
                if (reduce(s, phi.modulus) != 0) return false;
            }
    if (mode == Mode::quandle)
        for (Element x = 0; x < n; ++x)
            if (reduce(phi(x, x), phi.modulus) != 0) return false;
    return true;
}

IntegerMatrix cocycle_constraints(const QuandleTable& X, Mode mode) {
    const std::size_t n = X.order();
    const std::size_t rows = n * n * n + (mode == Mode::quandle ? n : 0);
    IntegerMatrix A(rows, n * n);
    auto var = [n](Element a, Element b) { return static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b); };
    std::size_t r = 0;
    for (Element x = 0; x < static_cast<Element>(n); ++x)
        for (Element y = 0; y < static_cast<Element>(n); ++y)
            for (Element z = 0; z < static_cast<Element>(n); ++z, ++r) {
                A(r, var(x, y)) += 1;
                A(r, var(x, z)) -= 1;
                A(r, var(X.op(x, y), z)) += 1;
                A(r, var(X.op(x, z), X.op(y, z))) -= 1;
            }
    if (mode == Mode::quandle)
        for (Element x = 0; x < static_cast<Element>(n); ++x, ++r) A(r, var(x, x)) = 1;
    return A;
}

CocycleSpace cocycle_space(const QuandleTable& X, std::uint64_t modulus, Mode mode) {
    if (modulus < 2) throw Error("cocycle modulus must be at least 2");
    const std::size_t n = X.order();
    const std::size_t unknowns = n * n;
    IntegerMatrix A = cocycle_constraints(X, mode);

    // the row lattice has the same solutions mod d and at most n^2 basis rows
    Lattice rows(unknowns);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        SparseVector v;
        for (std::size_t j = 0; j < unknowns; ++j)
            if (A(i, j) != 0) v.entries.emplace_back(j, A(i, j));
        rows.add(std::move(v));
    }
    const auto& basis = rows.basis();
    IntegerMatrix R(basis.size(), unknowns);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [j, v] : basis[i].entries) R(i, j) = v;

    auto snf = smith_normal_form(R, false, true);
    const BigInt d(static_cast<unsigned long>(modulus));
    CocycleSpace space;
    space.order = n;
    space.modulus = modulus;
    space.cardinality = 1;
    for (std::size_t i = 0; i < unknowns; ++i) {
        BigInt order = d;
        if (i < snf.rank) mpz_gcd(order.get_mpz_t(), snf.invariant_factors[i].get_mpz_t(), d.get_mpz_t());
        if (order == 1) continue;
        const BigInt scale = d / order;
        CocycleTable g = CocycleTable::zero(n, modulus);
        bool nonzero = false;
        for (std::size_t k = 0; k < unknowns; ++k) {
            BigInt v = snf.V(k, i) * scale;
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
            g.values[k / n][k % n] = v.get_si();
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) continue;
        space.generators.push_back(std::move(g));
        space.generator_orders.push_back(order.get_ui());
        space.cardinality *= order;
    }
    return space;
}

std::vector<CocycleTable> CocycleSpace::members(std::uint64_t limit) const {
    if (cardinality > BigInt(static_cast<unsigned long>(limit))) throw Error("cocycle space too large to enumerate");
    std::vector<CocycleTable> out;
    std::vector<std::uint64_t> digits(generators.size(), 0);
    while (true) {
        CocycleTable phi = CocycleTable::zero(order, modulus);
        for (std::size_t g = 0; g < generators.size(); ++g)
            if (digits[g])
                for (std::size_t x = 0; x < order; ++x)
                    for (std::size_t y = 0; y < order; ++y)
                        phi.values[x][y] = reduce(static_cast<__int128>(phi.values[x][y]) +
                                                      static_cast<__int128>(digits[g]) * generators[g].values[x][y],
                                                  modulus);
        out.push_back(std::move(phi));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == generator_orders[i]) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

std::int64_t evaluate_cocycle(const CocycleTable& phi, const FormalChain& c) {
    if (c.is_zero()) return 0;
    if (c.degree() != 2) throw DegreeMismatch("2-cocycles evaluate on degree-2 chains");
    __int128 s = 0;
    for (const auto& [t, coef] : c.terms()) s += static_cast<__int128>(coef) * phi(t[0], t[1]);
    return reduce(s, phi.modulus);
}

CocycleTable coboundary(const QuandleTable& X, const std::vector<std::int64_t>& f, std::uint64_t modulus) {
    const std::size_t n = X.order();
    if (f.size() != n) throw Error("1-cochain size does not match the table");
    CocycleTable phi = CocycleTable::zero(n, modulus);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            phi.values[x][y] = reduce(static_cast<__int128>(f[x]) -
                                          f[static_cast<std::size_t>(X.op(static_cast<Element>(x), static_cast<Element>(y)))],
                                      modulus);
    return phi;
}

}  // namespace quandle

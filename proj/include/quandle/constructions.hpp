#pragma once

// Quandle families: trivial, dihedral, Alexander over Z_n and over
// Z_p[t]/(f), generalized Alexander and conjugation quandles of a finite
// group, the repetition-identity family over Z_p[t]/(g_{m,n}), and the
// backtracking enumeration of small connected quandles.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/core.hpp"

namespace quandle {

class NotAUnit : public Error {
public:
    using Error::Error;
};
class NotAnAutomorphism : public Error {
public:
    using Error::Error;
};
class NotPrime : public Error {
public:
    using Error::Error;
};
class PNotGreaterThanN : public Error {
public:
    using Error::Error;
};
class CapExceeded : public Error {
public:
    using Error::Error;
};

bool is_prime(std::uint64_t p);

/// Z_p[t]/(f) for monic f. Elements are coefficient vectors of degree < deg f,
/// indexed by sum c_i p^i. No irreducibility is assumed.
class PolyRing {
public:
    /// modulus coefficients low to high; the leading one must be 1 mod p.
    PolyRing(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t prime() const noexcept { return p_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    std::size_t size() const noexcept { return size_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    /// Reduces an arbitrary coefficient list into the ring.
    std::size_t element(const std::vector<std::uint64_t>& coeffs) const;
    std::vector<std::uint64_t> coefficients(std::size_t e) const;

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t sub(std::size_t a, std::size_t b) const;
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t one() const { return element({1}); }
    std::size_t t() const { return element({0, 1}); }
    std::size_t power(std::size_t a, std::uint64_t e) const;

    bool is_unit(std::size_t a) const;
    /// True when every nonzero element is a unit.
    bool is_field() const;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> modulus_;
    std::size_t size_;
};

/// Parses "t^3+t^2+1" or "1,0,1,1" (low to high) into coefficients mod p.
std::vector<std::uint64_t> parse_polynomial(std::string_view text, std::uint64_t p);

/// Cayley table with the identity at index 0.
struct GroupTable {
    std::vector<std::vector<Element>> mul;

    std::size_t order() const noexcept { return mul.size(); }
    Element inverse(Element g) const;
    void validate() const;  // throws Error unless a group with identity 0
};

GroupTable symmetric_group(std::size_t k);

QuandleTable trivial_quandle(std::size_t n);
QuandleTable dihedral(std::size_t n);
QuandleTable alexander_zn(std::uint64_t n, std::uint64_t t);
QuandleTable alexander_poly(const PolyRing& ring, std::size_t unit);
QuandleTable alexander_poly(std::uint64_t p, const std::vector<std::uint64_t>& modulus,
                            const std::vector<std::uint64_t>& unit);
/// x*y = f(x y^-1) y
QuandleTable gen_alexander(const GroupTable& G, const std::vector<Element>& automorphism);
/// x*y = y^-1 x y
QuandleTable conjugation(const GroupTable& G);

/// g_{m,n}(t) = sum_{i=0}^{n-1} t^{im}, low to high.
std::vector<std::uint64_t> burnside_polynomial(std::size_t m, std::size_t n);

/// Alexander quandle Z_p[t]/(g_{m,n}) with unit t. Requires p prime, p > n;
/// checks that 1-t is a unit and t^{mn} = 1 in the ring.
QuandleTable burnside_family(std::size_t m, std::size_t n, std::uint64_t p);

inline constexpr std::size_t default_enumeration_cap = 6;

/// Connected quandles of the given order up to isomorphism, each in its
/// lexicographically minimal relabeling, sorted.
std::vector<QuandleTable> enumerate_connected(std::size_t order, std::size_t cap = default_enumeration_cap);

/// Row-major table of the lexicographically least relabeling.
std::vector<Element> canonical_form(const QuandleTable& X);

/// Construction from "kind:params" text:
///   trivial:N  dihedral:N  alexander:N:T  poly:P:F:U  burnside:M:N:P  conjugation-sym:K
QuandleTable make(std::string_view spec);

}  // namespace quandle

#include "quandle/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace quandle {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

PolyRing::PolyRing(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw NotPrime(std::to_string(p_) + " is not prime");
    for (auto& c : modulus_) c %= p_;
    while (!modulus_.empty() && modulus_.back() == 0) modulus_.pop_back();
    if (modulus_.size() < 2) throw Error("modulus polynomial must have degree >= 1");
    if (modulus_.back() != 1) throw Error("modulus polynomial must be monic");
    size_ = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (size_ > (std::size_t{1} << 24) / p_) throw Error("polynomial quotient ring too large");
        size_ *= p_;
    }
}

std::size_t PolyRing::element(const std::vector<std::uint64_t>& input) const {
    std::vector<std::uint64_t> c(input);
    for (auto& v : c) v %= p_;
    const std::size_t D = degree();
    for (std::size_t k = c.size(); k-- > D;) {
        const std::uint64_t lead = c[k];
        if (lead == 0) continue;
        for (std::size_t i = 0; i <= D; ++i) {
            auto& slot = c[k - D + i];
            slot = (slot + p_ * p_ - (lead * modulus_[i]) % p_) % p_;
        }
    }
    std::size_t idx = 0;
    for (std::size_t i = std::min(D, c.size()); i-- > 0;) idx = idx * p_ + static_cast<std::size_t>(c[i]);
    return idx;
}

std::vector<std::uint64_t> PolyRing::coefficients(std::size_t e) const {
    std::vector<std::uint64_t> c(degree());
    for (auto& v : c) {
        v = e % p_;
        e /= p_;
    }
    return c;
}

std::size_t PolyRing::add(std::size_t a, std::size_t b) const {
    auto x = coefficients(a), y = coefficients(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p_;
    return element(x);
}

std::size_t PolyRing::sub(std::size_t a, std::size_t b) const {
    auto x = coefficients(a), y = coefficients(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + p_ - y[i]) % p_;
    return element(x);
}

std::size_t PolyRing::mul(std::size_t a, std::size_t b) const {
    auto x = coefficients(a), y = coefficients(b);
    std::vector<std::uint64_t> prod(2 * degree(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    return element(prod);
}

std::size_t PolyRing::power(std::size_t a, std::uint64_t e) const {
    std::size_t r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool PolyRing::is_unit(std::size_t a) const {
    for (std::size_t b = 0; b < size_; ++b)
        if (mul(a, b) == one()) return true;
    return false;
}

bool PolyRing::is_field() const {
    for (std::size_t a = 1; a < size_; ++a)
        if (!is_unit(a)) return false;
    return true;
}

std::vector<std::uint64_t> parse_polynomial(std::string_view text, std::uint64_t p) {
    auto parse_uint = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("bad number '" + std::string(s) + "' in polynomial");
        return v;
    };
    std::vector<std::uint64_t> coeffs;
    auto set = [&](std::size_t e, std::uint64_t v, bool negative) {
        if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
        v %= p;
        coeffs[e] = (coeffs[e] + (negative ? p - v : v)) % p;
    };
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.find('t') == std::string::npos) {
        std::size_t e = 0;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) set(e++, parse_uint(item), false);
        if (coeffs.empty()) throw Error("empty polynomial");
        return coeffs;
    }
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string_view term(s.data() + i, j - i);
        if (term.empty()) throw Error("empty term in polynomial");
        auto tpos = term.find('t');
        if (tpos == std::string_view::npos) {
            set(0, parse_uint(term), negative);
        } else {
            std::string_view coef = term.substr(0, tpos);
            if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
            const std::uint64_t c = coef.empty() ? 1 : parse_uint(coef);
            std::string_view rest = term.substr(tpos + 1);
            std::uint64_t e = 1;
            if (!rest.empty()) {
                if (rest[0] != '^') throw Error("bad term '" + std::string(term) + "' in polynomial");
                e = parse_uint(rest.substr(1));
            }
            set(static_cast<std::size_t>(e), c, negative);
        }
        i = j;
    }
    return coeffs;
}

// ---------------------------------------------------------------------------

Element GroupTable::inverse(Element g) const {
    for (Element h = 0; h < static_cast<Element>(order()); ++h)
        if (mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == 0) return h;
    throw Error("element has no inverse");
}

void GroupTable::validate() const {
    const std::size_t n = order();
    if (n == 0) throw Error("empty group");
    for (const auto& row : mul) {
        if (row.size() != n) throw Error("group table is not square");
        for (Element e : row)
            if (e < 0 || static_cast<std::size_t>(e) >= n) throw Error("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        if (mul[0][a] != static_cast<Element>(a) || mul[a][0] != static_cast<Element>(a))
            throw Error("index 0 is not the identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul[static_cast<std::size_t>(mul[a][b])][c] != mul[a][static_cast<std::size_t>(mul[b][c])])
                    throw Error("group table is not associative");
    for (std::size_t a = 0; a < n; ++a) inverse(static_cast<Element>(a));
}

GroupTable symmetric_group(std::size_t k) {
    std::vector<std::vector<Element>> perms;
    std::vector<Element> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<Element>, Element> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);
    GroupTable G;
    G.mul.assign(perms.size(), std::vector<Element>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            // (ab)(i) = b(a(i)): apply a first
            std::vector<Element> c(k);
            for (std::size_t i = 0; i < k; ++i) c[i] = perms[b][static_cast<std::size_t>(perms[a][i])];
            G.mul[a][b] = index.at(c);
        }
    return G;
}

QuandleTable trivial_quandle(std::size_t n) {
    return QuandleTable::from_operation(n, [](std::size_t x, std::size_t) { return x; }, Mode::quandle);
}

QuandleTable dihedral(std::size_t n) {
    return QuandleTable::from_operation(n, [n](std::size_t x, std::size_t y) { return (2 * y + n - x) % n; },
                                        Mode::quandle);
}

QuandleTable alexander_zn(std::uint64_t n, std::uint64_t t) {
    if (n == 0) throw Error("alexander quandle over Z_0");
    t %= n;
    if (std::gcd(t, n) != 1) throw NotAUnit(std::to_string(t) + " is not a unit mod " + std::to_string(n));
    const std::uint64_t s = (1 + n - t) % n;
    return QuandleTable::from_operation(
        static_cast<std::size_t>(n), [&](std::size_t x, std::size_t y) { return (t * x + s * y) % n; }, Mode::quandle);
}

QuandleTable alexander_poly(const PolyRing& ring, std::size_t unit) {
    if (!ring.is_unit(unit)) throw NotAUnit("multiplier is not a unit in the quotient ring");
    const std::size_t s = ring.sub(ring.one(), unit);
    return QuandleTable::from_operation(
        ring.size(), [&](std::size_t x, std::size_t y) { return ring.add(ring.mul(unit, x), ring.mul(s, y)); },
        Mode::quandle);
}

QuandleTable alexander_poly(std::uint64_t p, const std::vector<std::uint64_t>& modulus,
                            const std::vector<std::uint64_t>& unit) {
    PolyRing ring(p, modulus);
    return alexander_poly(ring, ring.element(unit));
}

QuandleTable gen_alexander(const GroupTable& G, const std::vector<Element>& f) {
    G.validate();
    const std::size_t n = G.order();
    if (f.size() != n) throw NotAnAutomorphism("automorphism has the wrong size");
    try {
        Permutation check(f);
    } catch (const Error&) {
        throw NotAnAutomorphism("automorphism is not a bijection");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (f[static_cast<std::size_t>(G.mul[a][b])] != G.mul[static_cast<std::size_t>(f[a])][static_cast<std::size_t>(f[b])])
                throw NotAnAutomorphism("map does not respect the group operation");
    return QuandleTable::from_operation(
        n,
        [&](std::size_t x, std::size_t y) {
            const auto xy_inv = static_cast<std::size_t>(G.mul[x][static_cast<std::size_t>(G.inverse(static_cast<Element>(y)))]);
            return G.mul[static_cast<std::size_t>(f[xy_inv])][y];
        },
        Mode::quandle);
}

QuandleTable conjugation(const GroupTable& G) {
    G.validate();
    return QuandleTable::from_operation(
        G.order(),
        [&](std::size_t x, std::size_t y) {
            const auto yi = static_cast<std::size_t>(G.inverse(static_cast<Element>(y)));
            return G.mul[static_cast<std::size_t>(G.mul[yi][x])][y];
        },
        Mode::quandle);
}

std::vector<std::uint64_t> burnside_polynomial(std::size_t m, std::size_t n) {
    std::vector<std::uint64_t> g(m * (n - 1) + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g[i * m] = 1;
    return g;
}

QuandleTable burnside_family(std::size_t m, std::size_t n, std::uint64_t p) {
    if (m < 1 || n < 2) throw Error("burnside family needs m >= 1 and n >= 2");
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (p <= n) throw PNotGreaterThanN("p must exceed n");
    PolyRing ring(p, burnside_polynomial(m, n));
    const std::size_t t = ring.t();
    if (!ring.is_unit(ring.sub(ring.one(), t))) throw Error("1 - t is not a unit");
    if (ring.power(t, m * n) != ring.one()) throw Error("t^{mn} != 1");
    return alexander_poly(ring, t);
}

// ---------------------------------------------------------------------------

std::vector<Element> canonical_form(const QuandleTable& X) {
    const std::size_t n = X.order();
    std::vector<Element> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<Element> best, cur(n * n);
    do {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                cur[static_cast<std::size_t>(sigma[x]) * n + static_cast<std::size_t>(sigma[y])] =
                    sigma[static_cast<std::size_t>(X.op(static_cast<Element>(x), static_cast<Element>(y)))];
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

namespace {

std::vector<std::size_t> cycle_type(const std::vector<Element>& p) {
    std::vector<std::size_t> lengths;
    std::vector<char> seen(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = 1, ++len;
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

class ConnectedSearch {
public:
    ConnectedSearch(std::size_t n, std::vector<Element> r0, std::vector<std::vector<std::vector<Element>>> candidates)
        : n_(n), candidates_(std::move(candidates)), table_(n, std::vector<Element>(n, -1)), assigned_(n, 0) {
        set_column(0, r0);
    }

    void run(std::set<std::vector<Element>>& found) { search(1, found); }

private:
    void set_column(std::size_t y, const std::vector<Element>& perm) {
        for (std::size_t x = 0; x < n_; ++x) table_[x][y] = perm[x];
        assigned_[y] = 1;
    }

    bool consistent(std::size_t fresh) const {
        for (std::size_t b = 0; b < n_; ++b) {
            if (!assigned_[b]) continue;
            for (std::size_t c = 0; c < n_; ++c) {
                if (!assigned_[c]) continue;
                const auto bc = static_cast<std::size_t>(table_[b][c]);
                if (!assigned_[bc] || (b != fresh && c != fresh && bc != fresh)) continue;
                for (std::size_t a = 0; a < n_; ++a)
                    if (table_[static_cast<std::size_t>(table_[a][b])][c] !=
                        table_[static_cast<std::size_t>(table_[a][c])][bc])
                        return false;
            }
        }
        return true;
    }

    void search(std::size_t y, std::set<std::vector<Element>>& found) {
        if (y == n_) {
            RawTable raw(n_, std::vector<long long>(n_));
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = 0; b < n_; ++b) raw[a][b] = table_[a][b];
            auto X = QuandleTable::from_rows(raw, Mode::quandle);
            if (is_connected(X)) found.insert(canonical_form(X));
            return;
        }
        for (const auto& perm : candidates_[y]) {
            set_column(y, perm);
            if (consistent(y)) search(y + 1, found);
        }
        assigned_[y] = 0;
    }

    std::size_t n_;
    std::vector<std::vector<std::vector<Element>>> candidates_;
    std::vector<std::vector<Element>> table_;
    std::vector<char> assigned_;
};

}  // namespace

std::vector<QuandleTable> enumerate_connected(std::size_t order, std::size_t cap) {
    if (order > cap) throw CapExceeded("enumeration of order " + std::to_string(order) + " exceeds the cap " + std::to_string(cap));
    if (order == 0) return {};
    if (order == 1) return {trivial_quandle(1)};
    const std::size_t n = order;

    // In a connected quandle all right translations are conjugate in Inn(X),
    // so they share one cycle type; relabeling fixes R_0 to a representative.
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::vector<Element>>> fixing(n);  // permutations fixing y
    do
        for (std::size_t y = 0; y < n; ++y)
            if (p[y] == static_cast<Element>(y)) fixing[y].push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::size_t>, std::vector<Element>> representatives;
    for (const auto& q : fixing[0]) representatives.try_emplace(cycle_type(q), q);

    std::set<std::vector<Element>> found;
    for (const auto& [type, r0] : representatives) {
        if (type.size() == n) continue;  // identity column: not connected for n > 1
        std::vector<std::vector<std::vector<Element>>> candidates(n);
        for (std::size_t y = 1; y < n; ++y)
            for (const auto& q : fixing[y])
                if (cycle_type(q) == type) candidates[y].push_back(q);
        ConnectedSearch(n, r0, std::move(candidates)).run(found);
    }

    std::vector<QuandleTable> out;
    for (const auto& flat : found) {
        RawTable raw(n, std::vector<long long>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) raw[a][b] = flat[a * n + b];
        out.push_back(QuandleTable::from_rows(raw, Mode::quandle));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::uint64_t to_uint(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("expected a number, got '" + s + "'");
    return v;
}

}  // namespace

QuandleTable make(std::string_view spec) {
    auto f = split(spec, ':');
    const std::string& kind = f[0];
    auto need = [&](std::size_t count) {
        if (f.size() != count + 1)
            throw Error("construction '" + kind + "' takes " + std::to_string(count) + " parameter(s)");
    };
    if (kind == "trivial") {
        need(1);
        return trivial_quandle(to_uint(f[1]));
    }
    if (kind == "dihedral") {
        need(1);
        return dihedral(to_uint(f[1]));
    }
    if (kind == "alexander") {
        need(2);
        return alexander_zn(to_uint(f[1]), to_uint(f[2]));
    }
    if (kind == "poly") {
        need(3);
        const auto p = to_uint(f[1]);
        return alexander_poly(p, parse_polynomial(f[2], p), parse_polynomial(f[3], p));
    }
    if (kind == "burnside") {
        need(3);
        return burnside_family(to_uint(f[1]), to_uint(f[2]), to_uint(f[3]));
    }
    if (kind == "conjugation-sym") {
        need(1);
        return conjugation(symmetric_group(to_uint(f[1])));
    }
    throw Error("unknown construction '" + kind + "'");
}

}  // namespace quandle

#include "quandle/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "quandle/kernels.hpp"

namespace quandle {

std::string to_string(Axiom axiom) {
    switch (axiom) {
        case Axiom::out_of_range_entry: return "OutOfRangeEntry";
        case Axiom::column_not_bijective: return "ColumnNotBijective";
        case Axiom::self_distributivity_fails: return "SelfDistributivityFails";
        case Axiom::idempotency_fails: return "IdempotencyFails";
    }
    return "?";
}

std::string Violation::describe() const {
    std::ostringstream os;
    os << to_string(axiom) << '(';
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ')';
    return os.str();
}

ValidationError::ValidationError(Violation v) : Error(v.describe()), violation_(std::move(v)) {}

std::optional<Violation> check_axioms(const RawTable& raw, Mode mode) {
    const std::size_t n = raw.size();
    if (n == 0) return Violation{Axiom::out_of_range_entry, {}};
    for (std::size_t x = 0; x < n; ++x) {
        if (raw[x].size() != n) return Violation{Axiom::out_of_range_entry, {static_cast<Element>(x)}};
        for (std::size_t y = 0; y < n; ++y)
            if (raw[x][y] < 0 || static_cast<std::size_t>(raw[x][y]) >= n)
                return Violation{Axiom::out_of_range_entry, {static_cast<Element>(x), static_cast<Element>(y)}};
    }
    std::vector<char> seen(n);
    for (std::size_t y = 0; y < n; ++y) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t x = 0; x < n; ++x) {
            auto& s = seen[static_cast<std::size_t>(raw[x][y])];
            if (s) return Violation{Axiom::column_not_bijective, {static_cast<Element>(y)}};
            s = 1;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto ab = static_cast<std::size_t>(raw[a][b]);
                const auto ac = static_cast<std::size_t>(raw[a][c]);
                const auto bc = static_cast<std::size_t>(raw[b][c]);
                if (raw[ab][c] != raw[ac][bc])
                    return Violation{Axiom::self_distributivity_fails,
                                     {static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c)}};
            }
    if (mode == Mode::quandle)
        for (std::size_t x = 0; x < n; ++x)
            if (raw[x][x] != static_cast<long long>(x))
                return Violation{Axiom::idempotency_fails, {static_cast<Element>(x)}};
    return std::nullopt;
}

QuandleTable QuandleTable::from_rows(const RawTable& raw, Mode mode) {
    if (auto v = check_axioms(raw, mode)) throw ValidationError(*v);
    QuandleTable t;
    t.n_ = raw.size();
    t.cols_.resize(t.n_ * t.n_);
    t.quandle_ = true;
    for (std::size_t x = 0; x < t.n_; ++x) {
        for (std::size_t y = 0; y < t.n_; ++y) t.cols_[y * t.n_ + x] = static_cast<Element>(raw[x][y]);
        if (raw[x][x] != static_cast<long long>(x)) t.quandle_ = false;
    }
    return t;
}

std::vector<std::vector<Element>> QuandleTable::rows() const {
    std::vector<std::vector<Element>> out(n_, std::vector<Element>(n_));
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y) out[x][y] = cols_[y * n_ + x];
    return out;
}

RawTable QuandleTable::raw() const {
    RawTable out(n_, std::vector<long long>(n_));
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y) out[x][y] = cols_[y * n_ + x];
    return out;
}

void QuandleTable::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_) throw Error("label count does not match table order");
    labels_ = std::move(labels);
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size());
    for (Element e : images_) {
        if (e < 0 || static_cast<std::size_t>(e) >= images_.size() || seen[static_cast<std::size_t>(e)])
            throw Error("not a permutation");
        seen[static_cast<std::size_t>(e)] = 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Element> id(n);
    std::iota(id.begin(), id.end(), 0);
    Permutation p;
    p.images_ = std::move(id);
    return p;
}

Permutation Permutation::then(const Permutation& next) const {
    Permutation p;
    p.images_.resize(images_.size());
    kernels::active().gather(next.images_, images_, p.images_);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[static_cast<std::size_t>(images_[i])] = static_cast<Element>(i);
    return p;
}

bool Permutation::is_identity() const { return kernels::active().first_non_fixed(images_) == images_.size(); }

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t g = std::gcd(a, b);
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a / g, b, &out)) throw Error("lcm overflows 64 bits");
    return out;
}

namespace {

template <class F>
void for_each_cycle_length(std::span<const Element> images, F f) {
    std::vector<char> seen(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images[j])) {
            seen[j] = 1;
            ++len;
        }
        f(i, len);
    }
}

std::uint64_t permutation_order(std::span<const Element> images) {
    std::uint64_t order = 1;
    for_each_cycle_length(images, [&](std::size_t, std::uint64_t len) { order = lcm_checked(order, len); });
    return order;
}

struct ImageHash {
    std::size_t operator()(const std::vector<Element>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (Element e : v) {
            h ^= static_cast<std::uint32_t>(e);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

std::uint64_t Permutation::order() const { return permutation_order(images_); }

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    std::vector<char> seen(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        os << '(';
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            if (j != i) os << ' ';
            os << j;
            seen[j] = 1;
        }
        os << ')';
    }
    return os.str();
}

// ---------------------------------------------------------------------------

InvariantReport validate(const RawTable& raw, Mode mode, bool strict, std::size_t closure_cap) {
    if (auto v = check_axioms(raw, Mode::rack)) {
        if (strict) throw ValidationError(*v);
        InvariantReport r;
        r.violation = v;
        return r;
    }
    auto X = QuandleTable::from_rows(raw, Mode::rack);
    auto report = invariants(X, closure_cap);
    if (mode == Mode::quandle && !report.is_quandle) {
        auto v = check_axioms(raw, Mode::quandle);
        if (strict) throw ValidationError(*v);
        report.violation = v;
    }
    return report;
}

Permutation translate(const QuandleTable& X, Element b) {
    if (!X.contains(b)) throw Error("element out of range");
    auto col = X.column(b);
    return Permutation(std::vector<Element>(col.begin(), col.end()));
}

Element product(const QuandleTable& X, Element x, std::span<const Element> ys) {
    for (Element y : ys) x = X.op(x, y);
    return x;
}

PermutationGroup inner_group(const QuandleTable& X, std::size_t cap) {
    const std::size_t n = X.order();
    PermutationGroup G;
    for (Element b = 0; b < static_cast<Element>(n); ++b) {
        auto p = translate(X, b);
        if (std::find(G.generators.begin(), G.generators.end(), p) == G.generators.end())
            G.generators.push_back(std::move(p));
    }

    const auto& k = kernels::active();
    std::unordered_set<std::vector<Element>, ImageHash> seen;
    std::deque<std::vector<Element>> queue;
    auto id = Permutation::identity(n);
    std::vector<Element> start(id.images().begin(), id.images().end());
    seen.insert(start);
    queue.push_back(std::move(start));
    std::vector<Element> next(n);
    while (!queue.empty()) {
        auto g = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : G.generators) {
            k.gather(s.images(), g, next);
            if (seen.contains(next)) continue;
            if (seen.size() >= cap)
                throw ClosureBudgetExceeded("inner automorphism group exceeds " + std::to_string(cap) + " elements");
            seen.insert(next);
            queue.push_back(next);
        }
    }
    G.elements.reserve(seen.size());
    for (const auto& e : seen) G.elements.emplace_back(e);
    std::sort(G.elements.begin(), G.elements.end());
    return G;
}

std::uint64_t group_exponent(const PermutationGroup& G) {
    std::uint64_t e = 1;
    for (const auto& g : G.elements) e = lcm_checked(e, g.order());
    return e;
}

InnerSummary inner_summary(const QuandleTable& X, std::size_t cap) {
    const std::size_t n = X.order();
    if (n > 256) throw Error("inner_summary needs order <= 256");
    std::vector<std::vector<std::uint8_t>> gens;
    for (Element b = 0; b < static_cast<Element>(n); ++b) {
        auto col = X.column(b);
        std::vector<std::uint8_t> g(col.begin(), col.end());
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
    }

    // arena of packed permutations plus an open-addressing index into it
    std::vector<std::uint8_t> arena;
    std::vector<std::uint32_t> slots(1024, UINT32_MAX);
    std::size_t count = 0;
    auto hash = [n](const std::uint8_t* p) {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::size_t i = 0; i < n; ++i) h = (h ^ p[i]) * 1099511628211ULL;
        return h;
    };
    auto insert = [&](const std::uint8_t* p) -> bool {
        std::size_t mask = slots.size() - 1;
        for (std::size_t s = hash(p) & mask;; s = (s + 1) & mask) {
            if (slots[s] == UINT32_MAX) {
                if (count >= cap)
                    throw ClosureBudgetExceeded("inner automorphism group exceeds " + std::to_string(cap) + " elements");
                slots[s] = static_cast<std::uint32_t>(count++);
                arena.insert(arena.end(), p, p + n);
                return true;
            }
            if (std::equal(p, p + n, arena.data() + std::size_t{slots[s]} * n)) return false;
        }
    };
    auto grow = [&] {
        std::vector<std::uint32_t> bigger(slots.size() * 2, UINT32_MAX);
        std::size_t mask = bigger.size() - 1;
        for (std::uint32_t idx : slots) {
            if (idx == UINT32_MAX) continue;
            std::size_t s = hash(arena.data() + std::size_t{idx} * n) & mask;
            while (bigger[s] != UINT32_MAX) s = (s + 1) & mask;
            bigger[s] = idx;
        }
        slots.swap(bigger);
    };

    std::vector<std::uint8_t> id(n), next(n);
    std::iota(id.begin(), id.end(), std::uint8_t{0});
    insert(id.data());
    std::uint64_t exponent = 1;
    std::vector<char> seen(n);
    for (std::size_t head = 0; head < count; ++head) {
        std::fill(seen.begin(), seen.end(), 0);
        const std::uint8_t* g = arena.data() + head * n;
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            for (std::size_t j = i; !seen[j]; j = g[j]) seen[j] = 1, ++len;
            exponent = lcm_checked(exponent, len);
        }
        for (const auto& s : gens) {
            g = arena.data() + head * n;  // arena may have moved
            for (std::size_t i = 0; i < n; ++i) next[i] = s[g[i]];
            if (2 * count >= slots.size()) grow();
            insert(next.data());
        }
    }
    return {count, exponent};
}

std::uint64_t rack_type(const QuandleTable& X) {
    std::uint64_t t = 1;
    for (Element b = 0; b < static_cast<Element>(X.order()); ++b) t = lcm_checked(t, permutation_order(X.column(b)));
    return t;
}

bool is_connected(const QuandleTable& X) {
    const std::size_t n = X.order();
    std::vector<char> reached(n);
    std::vector<Element> stack{0};
    reached[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Element a = stack.back();
        stack.pop_back();
        for (Element b = 0; b < static_cast<Element>(n); ++b) {
            Element c = X.op(a, b);
            if (!reached[static_cast<std::size_t>(c)]) {
                reached[static_cast<std::size_t>(c)] = 1;
                ++count;
                stack.push_back(c);
            }
        }
    }
    return count == n;
}

bool is_faithful(const QuandleTable& X) {
    std::unordered_set<std::vector<Element>, ImageHash> cols;
    for (Element b = 0; b < static_cast<Element>(X.order()); ++b) {
        auto c = X.column(b);
        if (!cols.emplace(c.begin(), c.end()).second) return false;
    }
    return true;
}

std::optional<std::vector<Element>> mediality_witness(const QuandleTable& X) {
    const auto n = static_cast<Element>(X.order());
    const auto& k = kernels::active();
    std::vector<Element> lhs(X.order()), rhs(X.order());
    for (Element y = 0; y < n; ++y)
        for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v) {
                // lhs[x] = (x*y)*(u*v), rhs[x] = (x*u)*(y*v)
                k.gather(X.column(X.op(u, v)), X.column(y), lhs);
                k.gather(X.column(X.op(y, v)), X.column(u), rhs);
                auto x = k.first_mismatch(lhs, rhs);
                if (x < X.order()) return std::vector<Element>{static_cast<Element>(x), y, u, v};
            }
    return std::nullopt;
}

InvariantReport invariants(const QuandleTable& X, std::size_t closure_cap) {
    InvariantReport r;
    r.is_rack = true;
    r.is_quandle = X.is_quandle();
    r.is_connected = is_connected(X);
    r.is_medial = is_medial(X);
    r.is_faithful = is_faithful(X);
    r.type = rack_type(X);
    if (X.order() <= 256) {
        auto s = inner_summary(X, closure_cap);
        r.inn_order = s.order;
        r.inn_exponent = s.exponent;
    } else {
        auto G = inner_group(X, closure_cap);
        r.inn_order = G.order();
        r.inn_exponent = group_exponent(G);
    }
    return r;
}

InnerRepresentation inner_representation(const QuandleTable& X) {
    const std::size_t n = X.order();
    std::vector<Element> map(n);
    std::vector<Element> reps;
    for (std::size_t a = 0; a < n; ++a) {
        auto ca = X.column(static_cast<Element>(a));
        auto it = std::find_if(reps.begin(), reps.end(), [&](Element r) {
            auto cr = X.column(r);
            return std::equal(ca.begin(), ca.end(), cr.begin());
        });
        if (it == reps.end()) {
            map[a] = static_cast<Element>(reps.size());
            reps.push_back(static_cast<Element>(a));
        } else {
            map[a] = static_cast<Element>(it - reps.begin());
        }
    }
    const std::size_t m = reps.size();
    RawTable raw(m, std::vector<long long>(m, -1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto i = static_cast<std::size_t>(map[a]);
            auto j = static_cast<std::size_t>(map[b]);
            long long v = map[static_cast<std::size_t>(X.op(static_cast<Element>(a), static_cast<Element>(b)))];
            if (raw[i][j] == -1) {
                raw[i][j] = v;
            } else if (raw[i][j] != v) {
                throw InnQuandleIllDefined("R_a * R_b is not well defined at a=" + std::to_string(a) +
                                           ", b=" + std::to_string(b));
            }
        }
    return {QuandleTable::from_rows(raw, X.is_quandle() ? Mode::quandle : Mode::rack), std::move(map)};
}

}  // namespace quandle

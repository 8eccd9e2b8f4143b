#include "quandle/chains.hpp"

#include <set>
#include <sstream>

namespace quandle {

std::uint64_t basis_size(std::size_t order, std::size_t degree, std::uint64_t guard) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < degree; ++i) {
        if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(order), &size) || size > guard)
            throw SizeGuardExceeded("C_" + std::to_string(degree) + " of an order-" + std::to_string(order) +
                                    " rack exceeds the basis guard of " + std::to_string(guard) + " tuples");
    }
    return size;
}

std::size_t tuple_index(std::size_t order, const Tuple& t) {
    std::size_t idx = 0;
    for (Element e : t) idx = idx * order + static_cast<std::size_t>(e);
    return idx;
}

Tuple tuple_at(std::size_t order, std::size_t degree, std::size_t index) {
    Tuple t(degree);
    for (std::size_t i = degree; i-- > 0;) {
        t[i] = static_cast<Element>(index % order);
        index /= order;
    }
    return t;
}

std::int64_t FormalChain::coefficient(const Tuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? 0 : it->second;
}

void FormalChain::add(const Tuple& t, std::int64_t coef) {
    if (coef == 0) return;
    if (t.size() != degree_) throw Error("tuple length does not match chain degree");
    auto [it, inserted] = terms_.try_emplace(t, coef);
    if (inserted) return;
    if (__builtin_add_overflow(it->second, coef, &it->second)) throw Error("chain coefficient overflow");
    if (it->second == 0) terms_.erase(it);
}

FormalChain& FormalChain::operator+=(const FormalChain& other) {
    if (other.degree_ != degree_ && !other.is_zero()) throw Error("adding chains of different degree");
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
}

FormalChain& FormalChain::operator-=(const FormalChain& other) {
    if (other.degree_ != degree_ && !other.is_zero()) throw Error("subtracting chains of different degree");
    for (const auto& [t, c] : other.terms_) add(t, -c);
    return *this;
}

FormalChain FormalChain::operator-() const {
    FormalChain out(degree_);
    for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
    return out;
}

SparseVector FormalChain::to_sparse(std::size_t order) const {
    SparseVector v;
    v.entries.reserve(terms_.size());
    // std::map order on tuples is lexicographic, which is also index order
    for (const auto& [t, c] : terms_) v.entries.emplace_back(tuple_index(order, t), BigInt(static_cast<long>(c)));
    return v;
}

FormalChain FormalChain::from_sparse(std::size_t order, std::size_t degree, const SparseVector& v) {
    FormalChain c(degree);
    for (const auto& [i, value] : v.entries) {
        if (!value.fits_slong_p()) throw Error("chain coefficient exceeds 64 bits");
        c.add(tuple_at(order, degree, i), value.get_si());
    }
    return c;
}

std::string FormalChain::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (first) {
            os << c;
        } else {
            os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
        }
        first = false;
        os << " * (";
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
        os << ')';
    }
    return os.str();
}

Tuple face(const QuandleTable& X, const Tuple& t, std::size_t h, FaceKind kind) {
    if (h < 1 || h > t.size()) throw IndexOutOfRange("face index " + std::to_string(h) + " outside 1.." + std::to_string(t.size()));
    Tuple out;
    out.reserve(t.size() - 1);
    const Element xh = t[h - 1];
    for (std::size_t i = 0; i + 1 < h; ++i) out.push_back(kind == FaceKind::d ? t[i] : X.op(t[i], xh));
    out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(h), t.end());
    return out;
}

FormalChain face(const QuandleTable& X, const FormalChain& c, std::size_t h, FaceKind kind) {
    if (c.degree() == 0) throw IndexOutOfRange("face of a degree-0 chain");
    FormalChain out(c.degree() - 1);
    for (const auto& [t, coef] : c.terms()) out.add(face(X, t, h, kind), coef);
    return out;
}

FormalChain boundary(const QuandleTable& X, const FormalChain& c) {
    if (c.degree() == 0) throw DegreeTooSmall("boundary of a degree-0 chain");
    FormalChain out(c.degree() - 1);
    for (const auto& [t, coef] : c.terms())
        for (std::size_t h = 2; h <= t.size(); ++h) {
            const std::int64_t sign = (h % 2 == 0) ? 1 : -1;
            out.add(face(X, t, h, FaceKind::d), sign * coef);
            out.add(face(X, t, h, FaceKind::delta), -sign * coef);
        }
    return out;
}

FormalChain cycle_LS(const QuandleTable& X, const Word& w, const Assignment& a, Strictness strictness) {
    if (a.ys.size() != w.alphabet()) throw Error("assignment does not match the word's alphabet");
    if (!X.contains(a.x)) throw Error("element out of range");
    for (Element y : a.ys)
        if (!X.contains(y)) throw Error("element out of range");
    FormalChain L(2);
    Element cur = a.x;
    for (int l : w.tau()) {
        const Element y = a.ys[static_cast<std::size_t>(l)];
        L.add({cur, y});
        cur = X.op(cur, y);
    }
    if (strictness == Strictness::strict && cur != a.x)
        throw IdentityNotSatisfied("x" + w.text() + " != x at x=" + std::to_string(a.x));
    return L;
}

FormalChain medial_LS(const QuandleTable& X, Element x, Element y, Element u, Element v, Strictness strictness) {
    for (Element e : {x, y, u, v})
        if (!X.contains(e)) throw Error("element out of range");
    if (strictness == Strictness::strict && X.op(X.op(x, y), X.op(u, v)) != X.op(X.op(x, u), X.op(y, v)))
        throw NotMedial("mediality fails at the given quadruple");
    FormalChain L(2);
    L.add({x, y});
    L.add({X.op(x, y), X.op(u, v)});
    L.add({x, u}, -1);
    L.add({X.op(x, u), X.op(y, v)}, -1);
    return L;
}

FormalChain identity_generator(const QuandleTable& X, const Word& w, std::size_t j, const Tuple& xs,
                               const std::vector<Element>& ys) {
    const std::size_t n = xs.size() + 1;
    if (j >= n) throw IndexOutOfRange("y slot outside the tuple");
    if (ys.size() != w.alphabet()) throw Error("y values do not match the word's alphabet");
    FormalChain g(n);
    Tuple prefix(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(j));
    Tuple t(n);
    for (int l : w.tau()) {
        const Element y = ys[static_cast<std::size_t>(l)];
        std::copy(prefix.begin(), prefix.end(), t.begin());
        t[j] = y;
        std::copy(xs.begin() + static_cast<std::ptrdiff_t>(j), xs.end(), t.begin() + static_cast<std::ptrdiff_t>(j + 1));
        g.add(t);
        for (auto& p : prefix) p = X.op(p, y);
    }
    return g;
}

GeneratorSet subcomplex_generators(const QuandleTable& X, const SubcomplexKind& kind, std::size_t degree,
                                   std::uint64_t guard) {
    if (degree < 2) throw DegreeTooSmall("subcomplex generators need degree >= 2");
    const std::size_t n = X.order();
    const std::uint64_t size = basis_size(n, degree, guard);
    GeneratorSet gs;
    gs.degree = degree;
    gs.kind = kind;

    if (kind.tag == SubcomplexKind::Tag::degenerate) {
        for (std::size_t idx = 0; idx < size; ++idx) {
            Tuple t = tuple_at(n, degree, idx);
            for (std::size_t i = 0; i + 1 < degree; ++i)
                if (t[i] == t[i + 1]) {
                    FormalChain c(degree);
                    c.add(t);
                    gs.chains.push_back(std::move(c));
                    gs.provenance.push_back({i, t, {}});
                    break;
                }
        }
        return gs;
    }

    const Word& w = kind.word;
    const std::uint64_t xs_count = basis_size(n, degree - 1, guard);
    const std::uint64_t ys_count = basis_size(n, w.alphabet(), guard);
    if (xs_count * ys_count * degree > 20 * guard)
        throw SizeGuardExceeded("identity generator count exceeds the guard");
    std::set<std::map<Tuple, std::int64_t>> seen;
    for (std::size_t j = kind.include_j0 ? 0 : 1; j < degree; ++j)
        for (std::size_t xi = 0; xi < xs_count; ++xi) {
            Tuple xs = tuple_at(n, degree - 1, xi);
            for_each_tuple(n, w.alphabet(), [&](const std::vector<Element>& ys) {
                FormalChain g = identity_generator(X, w, j, xs, ys);
                if (seen.insert(g.terms()).second) {
                    gs.chains.push_back(std::move(g));
                    gs.provenance.push_back({j, xs, ys});
                }
                return true;
            });
        }
    return gs;
}

Lattice span_lattice(const QuandleTable& X, const GeneratorSet& gens) {
    Lattice L(static_cast<std::size_t>(basis_size(X.order(), gens.degree)));
    for (const auto& c : gens.chains) L.add(c.to_sparse(X.order()));
    return L;
}

bool in_span(const QuandleTable& X, const FormalChain& c, const GeneratorSet& gens) {
    if (c.is_zero()) return true;
    if (c.degree() != gens.degree) throw Error("chain and generator degrees differ");
    return span_lattice(X, gens).contains(c.to_sparse(X.order()));
}

}  // namespace quandle

#include "quandle/normal_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace quandle {

namespace {

int abs_cmp(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt trunc_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(src, j) != 0) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, src) != 0) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

BigInt determinant(const IntegerMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntegerMatrix m = input;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) return false;
    BigInt d = determinant(m);
    return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------

SmithResult smith_normal_form(const IntegerMatrix& input, bool with_u, bool with_v) {
    SmithResult r;
    IntegerMatrix& a = r.D;
    a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (with_u) r.U = IntegerMatrix::identity(rows);
    if (with_v) r.V = IntegerMatrix::identity(cols);

    auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        a.add_row(dst, src, f);
        if (with_u) r.U.add_row(dst, src, f);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        a.add_col(dst, src, f);
        if (with_v) r.V.add_col(dst, src, f);
    };
    auto row_swap = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        if (with_u) r.U.swap_rows(x, y);
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        a.swap_cols(x, y);
        if (with_v) r.V.swap_cols(x, y);
    };

    const std::size_t limit = std::min(rows, cols);
    for (std::size_t t = 0; t < limit; ++t) {
        // smallest |entry| in the trailing block, row-major on ties
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a(i, j) != 0 && (pi == rows || abs_cmp(a(i, j), a(pi, pj)) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        row_swap(t, pi);
        col_swap(t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a(i, t) != 0) {
                    row_add(i, t, -trunc_div(a(i, t), a(t, t)));
                    if (a(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a(t, j) != 0) {
                    col_add(j, t, -trunc_div(a(t, j), a(t, t)));
                    if (a(t, j) != 0) clean = false;
                }
            if (!clean) {
                // a smaller remainder sits in row t or column t; move it to the pivot
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a(i, t) != 0 && abs_cmp(a(i, t), a(bi, bj)) < 0) bi = i, bj = t;
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(t, j) != 0 && abs_cmp(a(t, j), a(bi, bj)) < 0) bi = t, bj = j;
                row_swap(t, bi);
                col_swap(t, bj);
                continue;
            }
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_add(t, bad, 1);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            if (with_u) r.U.negate_row(t);
        }
        r.invariant_factors.push_back(a(t, t));
        ++r.rank;
    }
    return r;
}

HermiteResult hermite_normal_form(const IntegerMatrix& input) {
    HermiteResult r;
    r.H = input;
    IntegerMatrix& h = r.H;
    const std::size_t rows = h.rows();
    r.U = IntegerMatrix::identity(rows);
    std::size_t p = 0;
    for (std::size_t j = 0; j < h.cols() && p < rows; ++j) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = p; i < rows; ++i)
                if (h(i, j) != 0 && (best == rows || abs_cmp(h(i, j), h(best, j)) < 0)) best = i;
            if (best == rows) break;
            h.swap_rows(p, best);
            r.U.swap_rows(p, best);
            bool clean = true;
            for (std::size_t i = p + 1; i < rows; ++i)
                if (h(i, j) != 0) {
                    BigInt q = -floor_div(h(i, j), h(p, j));
                    h.add_row(i, p, q);
                    r.U.add_row(i, p, q);
                    if (h(i, j) != 0) clean = false;
                }
            if (clean) break;
        }
        if (h(p, j) == 0) continue;
        if (h(p, j) < 0) {
            h.negate_row(p);
            r.U.negate_row(p);
        }
        for (std::size_t i = 0; i < p; ++i) {
            BigInt q = -floor_div(h(i, j), h(p, j));
            h.add_row(i, p, q);
            r.U.add_row(i, p, q);
        }
        r.pivot_cols.push_back(j);
        ++p;
    }
    r.rank = p;
    return r;
}

// ---------------------------------------------------------------------------

const BigInt* SparseVector::find(std::size_t index) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const auto& e, std::size_t i) { return e.first < i; });
    return (it != entries.end() && it->first == index) ? &it->second : nullptr;
}

SparseVector SparseVector::combine(const BigInt& a, const SparseVector& u, const BigInt& b, const SparseVector& v) {
    SparseVector out;
    out.entries.reserve(u.entries.size() + v.entries.size());
    auto i = u.entries.begin();
    auto j = v.entries.begin();
    while (i != u.entries.end() || j != v.entries.end()) {
        if (j == v.entries.end() || (i != u.entries.end() && i->first < j->first)) {
            if (a != 0) out.entries.emplace_back(i->first, a * i->second);
            ++i;
        } else if (i == u.entries.end() || j->first < i->first) {
            if (b != 0) out.entries.emplace_back(j->first, b * j->second);
            ++j;
        } else {
            BigInt s = a * i->second + b * j->second;
            if (s != 0) out.entries.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

IntegerMatrix SparseMatrix::to_dense() const {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i].entries) m(i, j) = v;
    return m;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols != other.rows.size()) throw std::invalid_argument("sparse matrix dimension mismatch");
    SparseMatrix out;
    out.cols = other.cols;
    out.rows.reserve(rows.size());
    for (const auto& row : rows) {
        SparseVector acc;
        for (const auto& [k, v] : row.entries) acc = SparseVector::combine(1, acc, v, other.rows[k]);
        out.rows.push_back(std::move(acc));
    }
    return out;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(rows.begin(), rows.end(), [](const SparseVector& r) { return r.empty(); });
}

EliminationResult sparse_invariant_factors(const SparseMatrix& m) {
    std::vector<SparseVector> rows = m.rows;
    std::vector<std::unordered_set<std::size_t>> col_rows(m.cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& e : rows[r].entries) col_rows[e.first].insert(r);
    std::vector<char> active(rows.size(), 1);

    auto replace_row = [&](std::size_t r, SparseVector next) {
        for (const auto& e : rows[r].entries)
            if (!next.find(e.first)) col_rows[e.first].erase(r);
        for (const auto& e : next.entries) col_rows[e.first].insert(r);
        rows[r] = std::move(next);
    };

    std::size_t unit_pivots = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r] || rows[r].empty()) continue;
            std::size_t best = m.cols;
            for (const auto& [c, v] : rows[r].entries)
                if ((v == 1 || v == -1) && (best == m.cols || col_rows[c].size() < col_rows[best].size())) best = c;
            if (best == m.cols) continue;
            const BigInt unit = *rows[r].find(best);
            std::vector<std::size_t> others(col_rows[best].begin(), col_rows[best].end());
            std::sort(others.begin(), others.end());
            for (std::size_t s : others) {
                if (s == r) continue;
                BigInt f = -(*rows[s].find(best)) * unit;
                replace_row(s, SparseVector::combine(1, rows[s], f, rows[r]));
            }
            replace_row(r, SparseVector{});
            active[r] = 0;
            ++unit_pivots;
            progress = true;
        }
    }

    // dense finish on whatever has no unit entries
    std::vector<std::size_t> live_rows;
    std::vector<std::size_t> col_map(m.cols, m.cols);
    std::size_t live_cols = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!active[r] || rows[r].empty()) continue;
        live_rows.push_back(r);
        for (const auto& e : rows[r].entries)
            if (col_map[e.first] == m.cols) col_map[e.first] = live_cols++;
    }
    EliminationResult out;
    out.rank = unit_pivots;
    out.invariant_factors.assign(unit_pivots, BigInt(1));
    if (!live_rows.empty()) {
        IntegerMatrix rest(live_rows.size(), live_cols);
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows[live_rows[i]].entries) rest(i, col_map[c]) = v;
        auto snf = smith_normal_form(rest, false, false);
        out.rank += snf.rank;
        out.invariant_factors.insert(out.invariant_factors.end(), snf.invariant_factors.begin(),
                                     snf.invariant_factors.end());
    }
    std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t pivot_of(const SparseVector& v) { return v.entries.front().first; }

}  // namespace

void Lattice::reduce_against_later(std::size_t r) {
    for (std::size_t j = r + 1; j < basis_.size(); ++j) {
        const BigInt* e = basis_[r].find(pivot_of(basis_[j]));
        if (!e) continue;
        const BigInt& piv = basis_[j].entries.front().second;
        if (*e >= 0 && *e < piv) continue;
        BigInt q = floor_div(*e, piv);
        basis_[r] = SparseVector::combine(1, basis_[r], -q, basis_[j]);
    }
}

void Lattice::restore_hermite(std::size_t i) {
    // rows after i are reduced; reduce i, then every earlier row touching i's pivot
    reduce_against_later(i);
    const std::size_t p = pivot_of(basis_[i]);
    for (std::size_t r = i; r-- > 0;)
        if (basis_[r].find(p)) reduce_against_later(r);
}

void Lattice::add(SparseVector v) {
    while (!v.empty()) {
        const std::size_t p = pivot_of(v);
        if (p >= dim_) throw std::out_of_range("lattice vector index exceeds dimension");
        auto it = std::lower_bound(basis_.begin(), basis_.end(), p,
                                   [](const SparseVector& b, std::size_t i) { return pivot_of(b) < i; });
        if (it == basis_.end() || pivot_of(*it) != p) {
            if (v.entries.front().second < 0)
                for (auto& e : v.entries) e.second = -e.second;
            const auto idx = static_cast<std::size_t>(it - basis_.begin());
            basis_.insert(it, std::move(v));
            restore_hermite(idx);
            return;
        }
        const auto idx = static_cast<std::size_t>(it - basis_.begin());
        const BigInt a = it->entries.front().second;
        const BigInt c = v.entries.front().second;
        if (mpz_divisible_p(c.get_mpz_t(), a.get_mpz_t())) {
            v = SparseVector::combine(1, v, -(c / a), *it);
            continue;
        }
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        SparseVector nb = SparseVector::combine(s, *it, t, v);
        v = SparseVector::combine(BigInt(a / g), v, BigInt(-(c / g)), *it);
        basis_[idx] = std::move(nb);
        restore_hermite(idx);
    }
}

std::optional<std::vector<BigInt>> Lattice::coordinates(const SparseVector& input) const {
    std::vector<BigInt> coords(basis_.size());
    SparseVector v = input;
    std::size_t search_from = 0;
    while (!v.empty()) {
        const std::size_t p = pivot_of(v);
        auto it = std::lower_bound(basis_.begin() + static_cast<std::ptrdiff_t>(search_from), basis_.end(), p,
                                   [](const SparseVector& b, std::size_t i) { return pivot_of(b) < i; });
        if (it == basis_.end() || pivot_of(*it) != p) return std::nullopt;
        const BigInt& a = it->entries.front().second;
        const BigInt& c = v.entries.front().second;
        if (!mpz_divisible_p(c.get_mpz_t(), a.get_mpz_t())) return std::nullopt;
        const auto idx = static_cast<std::size_t>(it - basis_.begin());
        coords[idx] = c / a;
        v = SparseVector::combine(1, v, -coords[idx], *it);
        search_from = idx + 1;
    }
    return coords;
}

bool Lattice::contains(const SparseVector& v) const { return coordinates(v).has_value(); }

void Lattice::reduce_upper() {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t p = pivot_of(basis_[i]);
        const BigInt piv = basis_[i].entries.front().second;
        for (std::size_t r = 0; r < i; ++r) {
            const BigInt* e = basis_[r].find(p);
            if (!e) continue;
            BigInt q = floor_div(*e, piv);
            if (q != 0) basis_[r] = SparseVector::combine(1, basis_[r], -q, basis_[i]);
        }
    }
    reduced_ = true;
}

const std::vector<SparseVector>& Lattice::basis() {
    if (!reduced_) reduce_upper();
    return basis_;
}

}  // namespace quandle

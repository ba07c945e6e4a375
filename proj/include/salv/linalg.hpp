// Exact linear algebra: Gaussian elimination over fields, Smith normal form
// over Euclidean PIDs with recorded transforms.

#pragma once

#include "matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace salv {

// ---------------------------------------------------------------- fields

// Row echelon reduction in place; returns pivot column list.
template <typename R>
std::vector<std::size_t> row_reduce(const R& ring, Matrix<typename R::Elem>& m) {
    static_assert(R::is_field);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && ring.is_zero(m.at(sel, c))) ++sel;
        if (sel == m.rows) continue;
        m.swap_rows(sel, r);
        auto inv = ring.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = ring.mul(inv, m.at(r, j));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || ring.is_zero(m.at(i, c))) continue;
            auto f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = ring.sub(m.at(i, j), ring.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename R>
std::size_t mat_rank(const R& ring, Matrix<typename R::Elem> m) {
    return row_reduce(ring, m).size();
}

template <typename R>
std::pair<std::size_t, std::size_t> rank_nullity(const R& ring,
                                                 const Matrix<typename R::Elem>& m) {
    std::size_t r = mat_rank(ring, m);
    return {r, m.cols - r};
}

// Basis of the null space, returned as columns of a matrix.
template <typename R>
Matrix<typename R::Elem> kernel_basis(const R& ring, Matrix<typename R::Elem> m) {
    static_assert(R::is_field);
    auto pivots = row_reduce(ring, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    auto K = mat_zero(ring, m.cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        K.at(fc, k) = ring.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            K.at(pivots[r], k) = ring.neg(m.at(r, fc));
    }
    return K;
}

// Solve A x = b; returns std::nullopt if inconsistent.
template <typename R>
std::optional<std::vector<typename R::Elem>> solve(const R& ring,
                                                   const Matrix<typename R::Elem>& a,
                                                   const std::vector<typename R::Elem>& b) {
    static_assert(R::is_field);
    Matrix<typename R::Elem> aug(a.rows, a.cols + 1, ring.zero());
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto pivots = row_reduce(ring, aug);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
    std::vector<typename R::Elem> x(a.cols, ring.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols);
    return x;
}

// Incremental column-space calculator over a field. Columns can be offered
// one at a time; independent ones are absorbed.
template <typename R>
class ColumnSpace {
  public:
    explicit ColumnSpace(const R& ring, std::size_t ambient) : ring_(ring), n_(ambient) {}

    std::size_t dim() const { return echelon_.size(); }

    bool contains(std::vector<typename R::Elem> v) const {
        reduce(v);
        for (const auto& c : v)
            if (!ring_.is_zero(c)) return false;
        return true;
    }

    // returns true if v was independent (and absorbed)
    bool add(std::vector<typename R::Elem> v) {
        reduce(v);
        std::size_t lead = n_;
        for (std::size_t i = 0; i < n_; ++i)
            if (!ring_.is_zero(v[i])) { lead = i; break; }
        if (lead == n_) return false;
        auto inv = ring_.inv(v[lead]);
        for (auto& c : v) c = ring_.mul(inv, c);
        echelon_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

  private:
    void reduce(std::vector<typename R::Elem>& v) const {
        for (std::size_t k = 0; k < echelon_.size(); ++k) {
            auto f = v[leads_[k]];
            if (ring_.is_zero(f)) continue;
            for (std::size_t i = 0; i < n_; ++i)
                v[i] = ring_.sub(v[i], ring_.mul(f, echelon_[k][i]));
        }
    }

    const R& ring_;
    std::size_t n_;
    std::vector<std::vector<typename R::Elem>> echelon_;
    std::vector<std::size_t> leads_;
};

// ------------------------------------------------------------- Smith form

template <typename R>
struct SmithResult {
    Matrix<typename R::Elem> U, D, V;   // U * A * V = D
    Matrix<typename R::Elem> Vinv;      // inverse of V, maintained alongside
    std::vector<typename R::Elem> divisors;  // nonzero diagonal, normalized
    std::size_t rank = 0;
};

// Smith normal form over a Euclidean PID. Deterministic: pivot is the entry
// of minimal edeg (ties broken by position), no randomization.
template <typename R>
SmithResult<R> smith_normal_form(const R& ring, Matrix<typename R::Elem> a) {
    static_assert(R::is_pid);
    const std::size_t m = a.rows, n = a.cols;
    SmithResult<R> res;
    res.U = mat_identity(ring, m);
    res.V = mat_identity(ring, n);
    res.Vinv = mat_identity(ring, n);

    auto add_row = [&](std::size_t dst, std::size_t src, const typename R::Elem& f) {
        // row_dst += f * row_src, applied to a and U
        for (std::size_t j = 0; j < n; ++j)
            a.at(dst, j) = ring.add(a.at(dst, j), ring.mul(f, a.at(src, j)));
        for (std::size_t j = 0; j < m; ++j)
            res.U.at(dst, j) = ring.add(res.U.at(dst, j), ring.mul(f, res.U.at(src, j)));
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const typename R::Elem& f) {
        // col_dst += f * col_src on a and V; inverse op on Vinv rows
        for (std::size_t i = 0; i < m; ++i)
            a.at(i, dst) = ring.add(a.at(i, dst), ring.mul(f, a.at(i, src)));
        for (std::size_t i = 0; i < n; ++i)
            res.V.at(i, dst) = ring.add(res.V.at(i, dst), ring.mul(f, res.V.at(i, src)));
        for (std::size_t j = 0; j < n; ++j)
            res.Vinv.at(src, j) = ring.sub(res.Vinv.at(src, j), ring.mul(f, res.Vinv.at(dst, j)));
    };
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        res.U.swap_rows(x, y);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        a.swap_cols(x, y);
        res.V.swap_cols(x, y);
        res.Vinv.swap_rows(x, y);
    };
    auto scale_row = [&](std::size_t i, const typename R::Elem& u) {
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = ring.mul(u, a.at(i, j));
        for (std::size_t j = 0; j < m; ++j) res.U.at(i, j) = ring.mul(u, res.U.at(i, j));
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // locate minimal-size nonzero entry in the trailing submatrix
        std::size_t pi = t, pj = t;
        long best = -1;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (ring.is_zero(a.at(i, j))) continue;
                long d = ring.edeg(a.at(i, j));
                if (best < 0 || d < best) { best = d; pi = i; pj = j; }
            }
        if (best < 0) break;  // submatrix is zero
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t by Euclidean steps
            for (std::size_t i = t + 1; i < m; ++i) {
                if (ring.is_zero(a.at(i, t))) continue;
                auto [q, r] = ring.divmod(a.at(i, t), a.at(t, t));
                add_row(i, t, ring.neg(q));
                if (!ring.is_zero(r)) {
                    swap_rows(t, i);  // remainder is strictly smaller, retry
                    dirty = true;
                }
            }
            // clear row t
            for (std::size_t j = t + 1; j < n; ++j) {
                if (ring.is_zero(a.at(t, j))) continue;
                auto [q, r] = ring.divmod(a.at(t, j), a.at(t, t));
                add_col(j, t, ring.neg(q));
                if (!ring.is_zero(r)) {
                    swap_cols(t, j);
                    dirty = true;
                }
            }
        }

        // enforce divisibility: pivot must divide the rest of the submatrix
        bool merged = false;
        for (std::size_t i = t + 1; i < m && !merged; ++i)
            for (std::size_t j = t + 1; j < n && !merged; ++j)
                if (!ring.divides(a.at(t, t), a.at(i, j))) {
                    add_row(t, i, ring.one());
                    merged = true;
                }
        if (merged) continue;  // redo the reduction for this t

        scale_row(t, ring.normal_unit(a.at(t, t)));
        ++t;
    }

    res.D = std::move(a);
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        if (ring.is_zero(res.D.at(k, k))) break;
        res.divisors.push_back(res.D.at(k, k));
    }
    res.rank = res.divisors.size();
    return res;
}

// Membership of b in the column span of A over a PID, via a precomputed SNF:
// A x = b solvable iff (U b)_i is divisible by d_i for i < rank and zero after.
template <typename R>
bool in_column_span(const R& ring, const SmithResult<R>& s,
                    const std::vector<typename R::Elem>& b) {
    std::size_t m = s.U.rows;
    std::vector<typename R::Elem> ub(m, ring.zero());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            ub[i] = ring.add(ub[i], ring.mul(s.U.at(i, j), b[j]));
    for (std::size_t i = 0; i < m; ++i) {
        if (i < s.rank) {
            if (!ring.divides(s.D.at(i, i), ub[i])) return false;
        } else if (!ring.is_zero(ub[i])) {
            return false;
        }
    }
    return true;
}

// gcd and lcm for ring elements where defined; lcm normalized like gcd.
template <typename R>
std::pair<typename R::Elem, typename R::Elem> gcd_lcm(const R& ring, const typename R::Elem& a,
                                                      const typename R::Elem& b) {
    auto g = ring.gcd(a, b);
    if (ring.is_zero(g)) return {g, ring.zero()};
    auto l = ring.mul(a, ring.exact_div(b, g));
    l = ring.mul(ring.normal_unit(l), l);
    return {g, l};
}

}  // namespace salv

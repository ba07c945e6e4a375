// Dense matrices over an arbitrary coefficient ring.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace salv {

template <typename T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> data;
    std::vector<std::string> row_labels, col_labels;  // optional

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& fill = T{})
        : rows(r), cols(c), data(r * c, fill) {}

    T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, a), at(i, b));
    }
};

template <typename R>
Matrix<typename R::Elem> mat_zero(const R& ring, std::size_t r, std::size_t c) {
    return Matrix<typename R::Elem>(r, c, ring.zero());
}

template <typename R>
Matrix<typename R::Elem> mat_identity(const R& ring, std::size_t n) {
    auto m = mat_zero(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
}

template <typename R>
Matrix<typename R::Elem> mat_mul(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    auto r = mat_zero(ring, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (ring.is_zero(a.at(i, k))) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = ring.add(r.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

template <typename R>
Matrix<typename R::Elem> mat_add(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("mat_add: shape mismatch");
    auto r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = ring.add(r.data[i], b.data[i]);
    return r;
}

template <typename R>
Matrix<typename R::Elem> mat_sub(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("mat_sub: shape mismatch");
    auto r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = ring.sub(r.data[i], b.data[i]);
    return r;
}

template <typename R>
Matrix<typename R::Elem> mat_neg(const R& ring, const Matrix<typename R::Elem>& a) {
    auto r = a;
    for (auto& v : r.data) v = ring.neg(v);
    return r;
}

template <typename R>
Matrix<typename R::Elem> mat_scale(const R& ring, const typename R::Elem& c,
                                   const Matrix<typename R::Elem>& a) {
    auto r = a;
    for (auto& v : r.data) v = ring.mul(c, v);
    return r;
}

template <typename R>
bool mat_eq(const R& ring, const Matrix<typename R::Elem>& a, const Matrix<typename R::Elem>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        if (!ring.eq(a.data[i], b.data[i])) return false;
    return true;
}

template <typename R>
bool mat_is_zero(const R& ring, const Matrix<typename R::Elem>& a) {
    for (const auto& v : a.data)
        if (!ring.is_zero(v)) return false;
    return true;
}

template <typename T>
Matrix<T> mat_transpose(const Matrix<T>& a) {
    Matrix<T> r(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

// columns picked from `a` by index list
template <typename T>
Matrix<T> mat_select_cols(const Matrix<T>& a, const std::vector<std::size_t>& idx) {
    Matrix<T> r(a.rows, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < a.rows; ++i) r.at(i, j) = a.at(i, idx[j]);
    return r;
}

template <typename T>
Matrix<T> mat_select_rows(const Matrix<T>& a, const std::vector<std::size_t>& idx) {
    Matrix<T> r(idx.size(), a.cols);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.at(i, j) = a.at(idx[i], j);
    return r;
}

// horizontal concatenation
template <typename T>
Matrix<T> mat_hcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows != b.rows) throw std::invalid_argument("mat_hcat: row mismatch");
    Matrix<T> r(a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

}  // namespace salv

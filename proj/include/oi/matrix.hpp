#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oi/field.hpp"

namespace oi {

/// Dense row-major matrix over an exact field.
template <FieldType F>
struct Matrix {
    using Scalar = typename F::Scalar;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> data;

    Matrix() = default;
    Matrix(const F& f, std::size_t r, std::size_t c)
        : rows(r), cols(c), data(r * c, f.zero()) {}

    Scalar& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::vector<Scalar> row(std::size_t i) const {
        return std::vector<Scalar>(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                                   data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

/// In-place Gauss-Jordan reduction to reduced row-echelon form.
/// Rows end up sorted by pivot column with zero rows at the bottom; returns the rank.
template <FieldType F>
std::size_t rref_in_place(const F& f, Matrix<F>& m) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
        const auto piv_inv = f.inv(m.at(pivot_row, col));
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(pivot_row, j) = f.mul(m.at(pivot_row, j), piv_inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == pivot_row || f.is_zero(m.at(i, col))) continue;
            const auto factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(pivot_row, j)));
        }
        ++pivot_row;
    }
    return pivot_row;
}

/// RREF as a value plus the rank.
template <FieldType F>
std::pair<Matrix<F>, std::size_t> rref(const F& f, Matrix<F> m) {
    std::size_t rank = rref_in_place(f, m);
    return {std::move(m), rank};
}

} // namespace oi

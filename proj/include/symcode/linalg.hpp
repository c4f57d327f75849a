/**
 * @file linalg.hpp
 * @brief Dense matrices over F_q (entries are canonical indices) and Gaussian elimination.
 */
#pragma once

#include "field.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace symcode {

/// Row-major matrix of field-element indices.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Index> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    Index& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    Index operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::span<const Index> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
    std::span<Index> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    std::vector<Index> column(std::size_t j) const {
        std::vector<Index> c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }

    static Matrix from_rows(const std::vector<std::vector<Index>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (rows[i].size() != m.cols) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    bool operator==(const Matrix&) const = default;
};

/// Reduced row echelon form in place; returns the rank.
inline std::size_t row_reduce(const Field& F, Matrix& a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols && rank < a.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(pivot, j), a(rank, j));
        const Index inv = F.inv(a(rank, col));
        for (std::size_t j = 0; j < a.cols; ++j) a(rank, j) = F.mul(a(rank, j), inv);
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == rank || a(i, col) == 0) continue;
            const Index factor = F.neg(a(i, col));
            for (std::size_t j = 0; j < a.cols; ++j) a(i, j) = F.add(a(i, j), F.mul(factor, a(rank, j)));
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank(const Field& F, Matrix a) { return row_reduce(F, a); }

}  // namespace symcode

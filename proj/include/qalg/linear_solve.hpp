#pragma once

#include <cstddef>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

/// Dense rational matrix in row-major order.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Result of solving M x = b exactly.
///
/// When consistent, `solution` has every free variable set to zero. When inconsistent,
/// `certificate` is a row vector y with y*M = 0 and y*b = 1.
struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    std::vector<Rational> solution;
    std::vector<std::size_t> pivot_columns;
    std::vector<std::size_t> free_columns;
    std::vector<Rational> certificate;

    std::size_t freedom() const { return free_columns.size(); }
};

/// Gauss-Jordan elimination over the rationals. Pivots are taken on the leftmost
/// available column, so the columns that end up free are the rightmost ones that can be.
LinearSolution solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs);

/// Basis of the right kernel of `m`.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

}  // namespace qalg

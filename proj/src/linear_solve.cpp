#include "qalg/linear_solve.hpp"

#include <utility>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

struct Reduced {
    RationalMatrix a;            // reduced row echelon form of [M | b]
    RationalMatrix ops;          // row operations applied, so ops * [M | b] = a
    std::vector<std::size_t> pivots;
};

Reduced reduce(const RationalMatrix& m, const std::vector<Rational>& rhs, bool track_ops) {
    const std::size_t rows = m.rows, cols = m.cols;
    Reduced red{RationalMatrix(rows, cols + 1), track_ops ? RationalMatrix(rows, rows) : RationalMatrix(rows, 0), {}};
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) red.a(r, c) = m(r, c);
        red.a(r, cols) = rhs[r];
        if (track_ops) red.ops(r, r) = 1;
    }
    auto swap_rows = [](RationalMatrix& x, std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < x.cols; ++c) std::swap(x(i, c), x(j, c));
    };
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && red.a(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        swap_rows(red.a, row, pivot);
        swap_rows(red.ops, row, pivot);
        Rational inv = 1 / red.a(row, col);
        for (std::size_t c = 0; c <= cols; ++c) red.a(row, c) *= inv;
        for (std::size_t c = 0; c < red.ops.cols; ++c) red.ops(row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || red.a(r, col) == 0) continue;
            Rational f = red.a(r, col);
            for (std::size_t c = col; c <= cols; ++c) red.a(r, c) -= f * red.a(row, c);
            for (std::size_t c = 0; c < red.ops.cols; ++c) red.ops(r, c) -= f * red.ops(row, c);
        }
        red.pivots.push_back(col);
        ++row;
    }
    return red;
}

}  // namespace

LinearSolution solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    if (rhs.size() != m.rows) throw DomainError("solve_linear: right-hand side has wrong length");
    Reduced red = reduce(m, rhs, false);
    LinearSolution out;
    out.rank = red.pivots.size();
    out.pivot_columns = red.pivots;
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : red.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) out.free_columns.push_back(c);

    for (std::size_t r = out.rank; r < m.rows; ++r) {
        if (red.a(r, m.cols) != 0) {
            red = reduce(m, rhs, true);
            Rational inv = 1 / red.a(r, m.cols);
            out.certificate.resize(m.rows);
            for (std::size_t c = 0; c < m.rows; ++c) out.certificate[c] = red.ops(r, c) * inv;
            return out;
        }
    }
    out.consistent = true;
    out.solution.assign(m.cols, Rational(0));
    for (std::size_t r = 0; r < out.rank; ++r) out.solution[red.pivots[r]] = red.a(r, m.cols);
    return out;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    Reduced red = reduce(m, std::vector<Rational>(m.rows), false);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : red.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols);
        v[f] = 1;
        for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.a(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qalg

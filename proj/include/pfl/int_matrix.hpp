#pragma once

// Integer matrices and exact kernel computation.
//
// The elimination is fraction-free (Bareiss): after step k every entry is a
// k+1 minor of the original matrix, so the division by the previous pivot is
// exact and intermediate growth stays polynomial. Kernel vectors are recovered
// by back substitution over the rationals and scaled to primitive integer
// vectors, first nonzero entry positive, ordered by free column. That basis is
// canonical: vector i has entry 1 (pre-scaling) at its own free column and 0
// at every other free column, so the result is independent of row order.

#include <algorithm>
#include <numeric>
#include <vector>

#include "pfl/errors.hpp"
#include "pfl/rational.hpp"

namespace pfl {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a; // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> m) {
        rows = static_cast<int>(m.size());
        cols = rows ? static_cast<int>(m.begin()->size()) : 0;
        for (const auto& row : m) {
            if (static_cast<int>(row.size()) != cols) throw InvalidInput("ragged matrix literal");
            for (long long v : row) a.emplace_back(v);
        }
    }

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != cols) throw InvalidInput("matrix/vector size mismatch");
        std::vector<Int> out(rows, Int(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    bool is_symmetric() const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = i + 1; j < cols; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }
};

namespace detail {

inline Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

// Divide by the gcd and make the first nonzero entry positive.
inline void make_primitive(std::vector<Int>& v) {
    Int g = vec_gcd(v);
    if (g == 0) return;
    for (auto& x : v) x /= g;
    for (const auto& x : v)
        if (x != 0) {
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
}

} // namespace detail

// Primitive integer basis of { v : M v = 0 }, one vector per free column.
inline std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
    IntMatrix r = m;
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot_col(static_cast<size_t>(m.cols), false);
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < r.cols && row < r.rows; ++col) {
        int p = -1;
        for (int i = row; i < r.rows; ++i)
            if (r.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(p, j), r.at(row, j));
        for (int i = row + 1; i < r.rows; ++i) {
            for (int j = col + 1; j < r.cols; ++j)
                r.at(i, j) = (r.at(row, col) * r.at(i, j) - r.at(i, col) * r.at(row, j)) / prev;
            r.at(i, col) = 0;
        }
        prev = r.at(row, col);
        pivot_col_of_row.push_back(col);
        is_pivot_col[static_cast<size_t>(col)] = true;
        ++row;
    }

    std::vector<std::vector<Int>> basis;
    for (int free = 0; free < r.cols; ++free) {
        if (is_pivot_col[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(r.cols), Rational(0));
        v[static_cast<size_t>(free)] = 1;
        for (int i = static_cast<int>(pivot_col_of_row.size()) - 1; i >= 0; --i) {
            int pc = pivot_col_of_row[static_cast<size_t>(i)];
            Rational s(0);
            for (int j = pc + 1; j < r.cols; ++j)
                if (v[static_cast<size_t>(j)] != 0) s += Rational(r.at(i, j)) * v[static_cast<size_t>(j)];
            v[static_cast<size_t>(pc)] = -s / Rational(r.at(i, pc));
        }
        Int lcm = 1;
        for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, den(x));
        std::vector<Int> w;
        w.reserve(v.size());
        for (const auto& x : v) w.push_back(num(x) * (lcm / den(x)));
        detail::make_primitive(w);
        basis.push_back(std::move(w));
    }
    return basis;
}

inline int integer_rank(const IntMatrix& m) {
    return m.cols - static_cast<int>(integer_kernel(m).size());
}

// The distinguished generator of a rank-one kernel, scaled primitive and
// strictly positive. This is the imaginary-root extraction for affine Cartan
// matrices and the multiplicity extraction for degenerate fiber lattices.
inline std::vector<Int> primitive_positive_generator(const std::vector<std::vector<Int>>& basis) {
    if (basis.size() != 1)
        throw KernelRankNotOne("kernel rank is " + std::to_string(basis.size()) + ", expected 1");
    std::vector<Int> v = basis.front();
    detail::make_primitive(v);
    bool has_pos = false;
    for (const auto& x : v)
        if (x > 0) has_pos = true;
    if (!has_pos)
        for (auto& x : v) x = -x;
    for (const auto& x : v)
        if (x <= 0) throw NoPositiveRepresentative("kernel line has no strictly positive representative");
    return v;
}

inline std::vector<Int> primitive_positive_generator(const IntMatrix& m) {
    return primitive_positive_generator(integer_kernel(m));
}

} // namespace pfl

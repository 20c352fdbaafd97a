// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistcoh {

QMatrix QMatrix::zero(int r, int c) {
    QMatrix m;
    m.rows = r;
    m.cols = c;
    m.a.assign(r, QVector(c, Rational(0)));
    return m;
}

QMatrix QMatrix::identity(int n) {
    QMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = Rational(1);
    return m;
}

QVector QMatrix::apply(const QVector& x) const {
    if ((int)x.size() != cols) throw std::invalid_argument("QMatrix::apply: size mismatch");
    QVector y(rows, Rational(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) y[i] += a[i][j] * x[j];
    return y;
}

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

std::vector<int> rref_in_place(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m.a[i][col].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(m.a[row], m.a[p]);
        Rational inv = Rational(1) / m.a[row][col];
        for (int j = col; j < m.cols; ++j) m.a[row][j] *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.a[i][col].is_zero()) continue;
            Rational f = m.a[i][col];
            for (int j = col; j < m.cols; ++j) m.a[i][j] -= f * m.a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

RankKernel rank_and_kernel(const QMatrix& m) {
    QMatrix r = m;
    std::vector<int> pivots = rref_in_place(r);
    RankKernel out;
    out.rank = (int)pivots.size();
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(m.cols, Rational(0));
        v[free] = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r.a[k][free];
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

bool RowSpace::insert(QVector v) {
    if ((int)v.size() != cols_) throw std::invalid_argument("RowSpace::insert: size mismatch");
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) { p = j; break; }
    if (p < 0) return false;
    Rational inv = Rational(1) / v[p];
    for (int j = p; j < cols_; ++j) v[j] *= inv;
    // back-eliminate the new pivot from stored rows
    for (auto& row : rows_)
        if (!row[p].is_zero()) {
            Rational f = row[p];
            for (int j = 0; j < cols_; ++j) row[j] -= f * v[j];
        }
    // keep rows sorted by pivot column
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

QVector RowSpace::reduce(QVector v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rational& f = v[pivots_[k]];
        if (f.is_zero()) continue;
        Rational g = f;  // rows have unit pivots
        for (int j = 0; j < cols_; ++j)
            if (!rows_[k][j].is_zero()) v[j] -= g * rows_[k][j];
    }
    return v;
}

bool RowSpace::contains(const QVector& v) const { return is_zero(reduce(v)); }

}  // namespace twistcoh

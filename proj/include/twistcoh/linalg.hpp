// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "twistcoh/rational.hpp"

namespace twistcoh {

using QVector = std::vector<Rational>;
/// Dense row-major rational matrix; rows may be empty (0 x c and r x 0 are
/// both legal).
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<QVector> a;  // rows entries, each of length cols

    static QMatrix zero(int r, int c);
    static QMatrix identity(int n);
    QVector apply(const QVector& x) const;  // matrix * x
};

struct RankKernel {
    int rank = 0;
    std::vector<QVector> kernel_basis;  // canonical (echelon-derived) basis
};

/// Exact Gaussian elimination with first-nonzero pivoting. Deterministic:
/// identical input gives identical output. rank + kernel dim = cols.
RankKernel rank_and_kernel(const QMatrix& m);

/// Reduced row echelon form. Returns pivot column indices; m is replaced by
/// its RREF.
std::vector<int> rref_in_place(QMatrix& m);

/// Row space in RREF, for canonical reduction against a subspace.
class RowSpace {
  public:
    explicit RowSpace(int cols) : cols_(cols) {}
    /// Inserts v; returns true when v enlarged the span.
    bool insert(QVector v);
    /// Canonical residual of v modulo the span (eliminates pivot coordinates).
    QVector reduce(QVector v) const;
    bool contains(const QVector& v) const;
    int dim() const { return (int)rows_.size(); }
    int cols() const { return cols_; }

  private:
    int cols_;
    std::vector<QVector> rows_;   // in echelon form, normalized pivots
    std::vector<int> pivots_;
};

bool is_zero(const QVector& v);

}  // namespace twistcoh

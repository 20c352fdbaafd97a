// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcoh/poly.hpp"

namespace twistcoh {

/// Strictly increasing list of 1-based generator indices; length = exterior
/// degree. The empty list is the degree-0 basis element.
using ExtIndex = std::vector<int>;

/// Sorts an arbitrary index list into an ExtIndex, returning the sign of the
/// permutation; nullopt when an index repeats (the wedge vanishes).
std::optional<std::pair<ExtIndex, int>> sort_with_sign(std::vector<int> idx);

/// Shuffle merge of two increasing lists: (e^I)^(e^J) = sign * e^{I u J},
/// nullopt when they intersect.
std::optional<std::pair<ExtIndex, int>> wedge_merge(const ExtIndex& I, const ExtIndex& J);

/// All ExtIndex of length p over {1..r}, lexicographic order.
std::vector<ExtIndex> ext_basis(int r, int p);

std::string ext_str(const ExtIndex& I, char gen = 'e');

/// Element of Omega^p with values in a rank-m free module: ExtIndex ->
/// m-vector of Poly coefficients. Absent keys and all-zero vectors mean
/// zero. rank/nvars identify the underlying model, fiber = m; scalar forms
/// have fiber 1.
struct Cochain {
    int rank = 0;   // number of exterior generators r
    int nvars = 0;  // coordinate variables of the coefficient algebra
    int degree = 0;
    int fiber = 1;
    std::map<ExtIndex, std::vector<Poly>> values;

    static Cochain zero(int rank, int nvars, int degree, int fiber = 1);
    /// Scalar basis form e^I (fiber 1, coefficient 1).
    static Cochain basis(int rank, int nvars, const ExtIndex& I);

    bool is_zero() const;
    bool same_space(const Cochain& o) const {
        return rank == o.rank && nvars == o.nvars && degree == o.degree && fiber == o.fiber;
    }

    /// Adds c * x^(implicit in p) e^I v_a; drops zeros.
    void add(const ExtIndex& I, int a, const Poly& p);
    /// Coefficient vector at I (zero vector when absent).
    std::vector<Poly> at(const ExtIndex& I) const;

    Cochain operator-() const;
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& c, const Cochain& w);
    friend Cochain operator*(const Poly& f, const Cochain& w);
    friend bool operator==(const Cochain& a, const Cochain& b);
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

    /// Weight = coefficient polynomial degree; nullopt when mixed weights.
    std::optional<int> homogeneous_weight() const;

    std::string str() const;
};

/// Wedge product; one operand must be scalar-valued (fiber 1). Throws on
/// mismatched spaces or two vector-valued operands.
Cochain wedge(const Cochain& a, const Cochain& b);

/// Interior product with the generator u_i: degree -1 antiderivation on the
/// exterior part.
Cochain contract_generator(const Cochain& w, int i);

}  // namespace twistcoh

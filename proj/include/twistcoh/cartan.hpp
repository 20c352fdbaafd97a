// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "twistcoh/exterior.hpp"

namespace twistcoh {

/// Polynomial multivector field on R^n: increasing coordinate index list ->
/// Poly coefficient. Degree 0 is a function, degree 1 a vector field.
struct Multivector {
    int nvars = 0;
    int degree = 0;
    std::map<ExtIndex, Poly> c;

    static Multivector zero(int nvars, int degree);
    static Multivector from_function(const Poly& f);
    /// Coordinate field d/dx_i.
    static Multivector coordinate_field(int nvars, int i);

    bool is_zero() const;
    void add(const ExtIndex& I, const Poly& p);
    Poly at(const ExtIndex& I) const;

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const Rational& r, const Multivector& m);
    friend bool operator==(const Multivector& a, const Multivector& b);
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    std::string str() const;
};

Multivector wedge(const Multivector& a, const Multivector& b);

/// Schouten-Nijenhuis bracket: the graded biderivation of the wedge algebra
/// of multivectors extending the vector-field bracket and [X,f] = X.f, with
/// [P,Q] of degree p+q-1 and graded antisymmetry
/// [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P].
Multivector schouten_bracket(const Multivector& P, const Multivector& Q);

/// Polynomial differential forms on R^n are scalar Cochains with rank =
/// nvars, generator i standing for dx_i.
Cochain form_from_function(int nvars, const Poly& f);

/// De Rham differential: d(f dx_I) = sum_k (df/dx_k) dx_k ^ dx_I.
Cochain derham_d(const Cochain& form);

/// Interior product with a degree-1 multivector (polynomial vector field).
Cochain interior_product(const Multivector& X, const Cochain& form);

/// Lie derivative via the Cartan homotopy formula L_X = i_X d + d i_X.
Cochain lie_derivative(const Multivector& X, const Cochain& form);

/// Pairing pi(alpha, beta) for a bivector and two 1-forms represented as
/// Cochains of degree 1 over R^n.
Poly bivector_pairing(const Multivector& pi, const Cochain& alpha, const Cochain& beta);

/// pi#(alpha) as a vector field: pi#(alpha)(beta) = pi(alpha, beta).
Multivector sharp(const Multivector& pi, const Cochain& alpha);

}  // namespace twistcoh

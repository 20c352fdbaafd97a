// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistcoh/rational.hpp"

namespace twistcoh {

/// Exponent vector of a monomial in x1..xn (length n, entries >= 0).
using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial over Q in n coordinate variables. n = 0 degenerates to a
/// scalar. Zero coefficients are never stored, so iteration order (grlex)
/// is canonical.
class Poly {
  public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rational& c);
    /// x_{i} with 1-based index i.
    static Poly variable(int nvars, int i);
    static Poly monomial(int nvars, const Exponents& e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the coefficient of the zero exponent vector).
    Rational constant_term() const;
    const std::map<Exponents, Rational, GrlexLess>& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// d/dx_i, 1-based.
    Poly derivative(int i) const;

    /// Max total degree of the terms; -1 for the zero polynomial.
    int total_degree() const;
    /// Degree of the homogeneous polynomial, or nullopt if not homogeneous.
    /// The zero polynomial is homogeneous of every degree (returns nullopt
    /// with is_zero() distinguishing it).
    std::optional<int> homogeneous_degree() const;
    /// Terms of total degree exactly d.
    Poly homogeneous_part(int d) const;

    void add_term(const Exponents& e, const Rational& c);

    /// Canonical ASCII form, e.g. "3/2*x1^2*x2 - x3 + 1".
    std::string str() const;

  private:
    int nvars_;
    std::map<Exponents, Rational, GrlexLess> terms_;
};

/// All exponent vectors of total degree d in n variables, grlex order.
/// n = 0 yields {()} for d = 0 and nothing otherwise.
std::vector<Exponents> monomials_of_degree(int nvars, int d);

}  // namespace twistcoh

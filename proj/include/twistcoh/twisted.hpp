// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistcoh/connection.hpp"

namespace twistcoh {

/// Sum of cochains of several degrees (Z/2-graded calculus works here).
/// theta inputs must be odd, Psi inputs even with zero degree-0 component.
struct MixedForm {
    int rank = 0;
    int nvars = 0;
    int fiber = 1;
    std::map<int, Cochain> comp;  // degree -> component, zero components dropped

    static MixedForm zero(int rank, int nvars, int fiber = 1);
    static MixedForm from_cochain(const Cochain& w);

    bool is_zero() const;
    bool is_odd() const;   // all components in odd degrees
    bool is_even() const;  // all components in even degrees
    void set_component(const Cochain& w);
    Cochain component(int degree) const;

    MixedForm operator-() const;
    MixedForm& operator+=(const MixedForm& o);
    MixedForm& operator-=(const MixedForm& o);
    friend MixedForm operator+(MixedForm a, const MixedForm& b) { return a += b; }
    friend MixedForm operator-(MixedForm a, const MixedForm& b) { return a -= b; }
    friend MixedForm operator*(const Rational& c, const MixedForm& w);
    friend bool operator==(const MixedForm& a, const MixedForm& b);
    friend bool operator!=(const MixedForm& a, const MixedForm& b) { return !(a == b); }

    std::string str() const;
};

/// Componentwise wedge; a must be scalar (fiber 1).
MixedForm wedge(const MixedForm& a, const MixedForm& b);

/// Componentwise covariant exterior derivative.
MixedForm cov_ext_d(const Connection& conn, const MixedForm& omega);
/// Componentwise scalar algebroid differential.
MixedForm algebroid_d(const AlgebroidModel& m, const MixedForm& omega);

/// d_nabla[theta] omega = d_nabla omega + theta ^ omega. Throws unless conn
/// is flat and theta is odd and d-closed (the nonzero d theta is the
/// witness). Use twisted_d_unchecked when the preconditions were already
/// validated for the complex.
MixedForm twisted_d(const Connection& conn, const MixedForm& theta, const MixedForm& omega);
MixedForm twisted_d_unchecked(const Connection& conn, const MixedForm& theta,
                              const MixedForm& omega);

struct SquareZeroReport {
    bool all_zero = true;
    /// For non-closed theta: confirms d[theta]^2 omega = d theta ^ omega on
    /// every probe (diagnostic identity from the square-zero lemma proof).
    bool defect_matches_dtheta = true;
    int probes = 0;
    std::vector<std::string> witnesses;
};

/// Applies twisted_d twice to every basis cochain up to max_weight.
SquareZeroReport check_square_zero(const Connection& conn, const MixedForm& theta,
                                   int max_weight);

/// exp(psi) ^ omega = sum_k psi^{wedge k}/k! ^ omega; terminates by exterior
/// nilpotency. psi must be even with zero degree-0 component.
MixedForm exp_wedge(const MixedForm& psi, const MixedForm& omega);

struct ConjugationReport {
    bool ok = true;
    bool d_exp_identity = true;  // d exp(Psi) = exp(Psi) ^ d Psi
    int probes = 0;
    std::vector<std::string> witnesses;
};

/// Checks d[theta](exp(Psi)^omega) = exp(Psi)^d[theta+dPsi](omega) on every
/// basis cochain up to max_weight.
ConjugationReport verify_conjugation(const Connection& conn, const MixedForm& theta,
                                     const MixedForm& psi, int max_weight);

/// All basis cochains (degree, ExtIndex, fiber, monomial weight <= max_weight)
/// of the model's cochain spaces, deterministic order.
std::vector<Cochain> basis_cochains(const AlgebroidModel& m, int fiber, int max_weight);

}  // namespace twistcoh

// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistcoh/cartan.hpp"
#include "twistcoh/errors.hpp"
#include "twistcoh/exterior.hpp"

namespace twistcoh {

/// Polynomial vector field on R^n as an n-vector of components.
using VectorField = std::vector<Poly>;
/// Section of the rank-r free module, as r Poly coefficients on u_1..u_r.
using Section = std::vector<Poly>;

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> violations;
    int validation_window = 0;
};

/// Rank-r free-module presentation of a Lie algebroid: anchor vector fields
/// a(u_i) and structure functions [u_i,u_j] = sum_k c_ij^k u_k, all with
/// weight-homogeneous Poly entries. Immutable once validated.
struct AlgebroidModel {
    enum class Kind { lie_algebra, action, poisson };

    Kind kind = Kind::lie_algebra;
    int rank = 0;
    int nvars = 0;
    std::vector<VectorField> anchor;                        // rank entries
    std::map<std::pair<int, int>, Section> structure;       // (i<j) -> c_ij
    int weight_shift = 0;                                   // s: weight change of d
    std::string name;

    /// c_ij coefficients for arbitrary i, j (antisymmetric, zero diagonal).
    Section bracket_coeffs(int i, int j) const;
    /// a(u_i) . f
    Poly anchor_apply(int i, const Poly& f) const;
    VectorField anchor_field(int i) const { return anchor[i - 1]; }

    /// Bracket of general sections via the Leibniz extension.
    Section section_bracket(const Section& s, const Section& t) const;
    VectorField anchor_of_section(const Section& s) const;

    Poly zero_poly() const { return Poly(nvars); }
    Poly one_poly() const { return Poly::constant(nvars, Rational(1)); }
};

VectorField vf_zero(int nvars);
VectorField vf_commutator(const VectorField& x, const VectorField& y);
Poly vf_apply(const VectorField& x, const Poly& f);

/// Lie algebra over a point: n = 0, zero anchor, constant structure data.
/// Throws ValidationError (naming a triple) when Jacobi fails.
AlgebroidModel build_lie_algebra(int rank,
                                 const std::map<std::pair<int, int>, std::vector<Rational>>& constants,
                                 const std::string& name = "");

/// Action algebroid of a Lie algebra acting on R^n by polynomial vector
/// fields. Validates that the action is a Lie algebra homomorphism.
AlgebroidModel build_action_algebroid(
    const std::map<std::pair<int, int>, std::vector<Rational>>& g_constants, int g_rank,
    int nvars, const std::vector<VectorField>& action, const std::string& name = "");

/// Cotangent algebroid of a Poisson bivector: generators dx_1..dx_n,
/// anchor(dx_i) = pi#(dx_i), c_ij^k = d(pi_ij)/dx_k. Throws when
/// [pi,pi]_SN != 0, carrying the nonzero trivector.
AlgebroidModel build_poisson_algebroid(const Multivector& pi, const std::string& name = "");

/// Exact axiom check: Jacobi (with Leibniz-extended sections over monomials
/// up to the window), the Leibniz rule itself, and the anchor morphism
/// property. window < 0 means the default (max structure degree + 2).
AxiomReport check_axioms(const AlgebroidModel& m, int window = -1);

/// Exterior derivative of the algebroid on scalar-valued cochains (Cartan
/// formula on generator tuples). Degree r input yields the zero cochain of
/// degree r+1.
Cochain algebroid_d(const AlgebroidModel& m, const Cochain& omega);

/// Degree-p identification of scalar cochains on a Poisson cotangent
/// algebroid with multivector fields (e^I <-> d_I).
Multivector cochain_to_multivector(const Cochain& w);
Cochain multivector_to_cochain(const AlgebroidModel& m, const Multivector& mv);

}  // namespace twistcoh

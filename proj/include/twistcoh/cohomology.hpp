// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistcoh/linalg.hpp"
#include "twistcoh/twisted.hpp"

namespace twistcoh {

/// One (twisted) cochain complex to compute: model + flat connection +
/// optional odd closed twist, sliced at a finite weight window.
struct ComplexSpec {
    const AlgebroidModel* model = nullptr;
    const Connection* conn = nullptr;
    MixedForm theta;     // scalar; zero means the untwisted, integer-graded complex
    int window = 6;      // W: weight cap for reported lines
    bool parallel = false;
    bool force_parity = false;  // Z/2 output even when theta = 0
};

/// Validates flatness and closedness of theta; throws ValidationError with a
/// witness otherwise.
ComplexSpec make_complex_spec(const AlgebroidModel& model, const Connection& conn,
                              const MixedForm& theta, int window, bool parallel = false);

struct BasisElem {
    ExtIndex I;
    int a;  // fiber index
    Exponents e;
};

/// Finite chain complex of one weight line: the differential connects
/// weight-homogeneous subspaces with weights w_p = line + p*shift.
struct LineComplex {
    int line = 0;  // weight at degree 0
    std::vector<int> weights;                   // per degree 0..r
    std::vector<std::vector<BasisElem>> bases;  // per degree
    std::vector<QMatrix> d;                     // d[p]: degree p -> p+1
};

/// Weight-line slicing of the untwisted complex; every line is a complete
/// finite complex (composites of consecutive matrices vanish). Lines cover
/// all spaces of weight <= window exactly once.
std::vector<LineComplex> weight_lines(const ComplexSpec& spec);

struct BettiEntry {
    int dim_space = 0;
    int betti = 0;
    bool stable = true;
    std::vector<MixedForm> reps;  // echelon-canonical cocycle representatives
};

struct LineResult {
    int line = 0;
    std::vector<int> weights;          // per degree (graded mode only)
    std::vector<BettiEntry> entries;   // per degree, or {even, odd} in parity mode
    std::vector<int> euler_sides;      // {sum +- dim, sum +- betti}
};

struct BettiReport {
    bool parity_mode = false;
    bool truncated = false;       // theta shift incompatible with the line grading
    int window = 0;
    std::vector<LineResult> lines;
    std::vector<int> total_dims;  // per degree or {even, odd}
    std::vector<int> total_betti;
    bool all_stable = true;
};

/// Exact Betti numbers with representatives. Untwisted specs are integer
/// graded per weight line; twisted specs are Z/2-graded, per line when the
/// twist's weight shift matches the differential's, else on the truncated
/// window with stability flags (recomputation at W-2).
BettiReport betti(const ComplexSpec& spec);

/// Canonical representative of a scalar cohomology class modulo
/// d-coboundaries (untwisted). The input must be d-closed.
Cochain reduce_scalar_class(const ComplexSpec& spec, const Cochain& cocycle);

/// Cup product [a]^[b] = [a^b] on scalar classes, reduced canonically.
Cochain cup_product(const ComplexSpec& spec, const Cochain& a, const Cochain& b);

/// Canonical representative modulo twisted coboundaries.
MixedForm reduce_twisted_class(const ComplexSpec& spec, const MixedForm& omega);

/// H(A)-module action: wedge a closed scalar class with a twisted class and
/// reduce modulo twisted coboundaries.
MixedForm module_action(const ComplexSpec& spec, const Cochain& a, const MixedForm& omega);

struct TwistInvarianceReport {
    bool betti_equal = true;
    bool mapped_closed = true;    // exp(-Psi)^rep is (theta+dPsi)-closed
    bool class_map_bijective = true;
    bool module_equivariant = true;
    bool ok = true;
    std::vector<std::string> witnesses;
    BettiReport report_theta;
    BettiReport report_shifted;
};

/// Verifies the twist-invariance pipeline: equal Betti tables for theta and
/// theta + dPsi, the conjugated representatives close and induce a bijection
/// on classes, and the H(A)-module action commutes with the isomorphism.
TwistInvarianceReport verify_twist_invariance(const ComplexSpec& spec, const MixedForm& psi);

}  // namespace twistcoh

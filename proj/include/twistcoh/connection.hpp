// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistcoh/model.hpp"

namespace twistcoh {

/// A-connection on a free module with frame v_1..v_m: Christoffel matrices
/// Gamma_i with nabla_{u_i} v_a = sum_b Gamma_i[a][b] v_b. C-infinity
/// linearity in the u-slot holds by construction.
struct Connection {
    const AlgebroidModel* model = nullptr;
    int fiber = 1;
    // gamma[i][a][b], i = 0..rank-1
    std::vector<std::vector<std::vector<Poly>>> gamma;

    /// nabla_{u_i} applied to a coefficient vector (components on the frame).
    std::vector<Poly> covariant(int i, const std::vector<Poly>& section) const;
};

/// End(V)-valued 2-form, stored on generator pairs i<j.
struct EndValuedTwoForm {
    int fiber = 1;
    std::map<std::pair<int, int>, std::vector<std::vector<Poly>>> entries;

    bool is_zero() const;
};

/// Trivial representation: m = 1, all Christoffel data zero.
Connection trivial_connection(const AlgebroidModel& m);

/// theta-modified trivial representation: m = 1, Gamma_i = theta(u_i) for a
/// scalar 1-cochain theta.
Connection theta_modified_connection(const AlgebroidModel& m, const Cochain& theta);

Connection build_connection(const AlgebroidModel& m, int fiber,
                            const std::vector<std::vector<std::vector<Poly>>>& gamma);

/// F(u_i,u_j) = nabla_i nabla_j - nabla_j nabla_i - nabla_{[u_i,u_j]} on the
/// frame.
EndValuedTwoForm curvature(const Connection& conn);

struct FlatnessResult {
    bool flat = true;
    std::pair<int, int> witness{0, 0};
    std::vector<std::vector<Poly>> witness_matrix;
};

FlatnessResult is_flat(const Connection& conn);

/// Covariant exterior derivative (Cartan formula with nabla in the first
/// sum). Accepts non-flat connections; d^2 is then governed by curvature.
Cochain cov_ext_d(const Connection& conn, const Cochain& omega);

/// Wedge of an End-valued 2-form against a V-valued cochain.
Cochain end_form_wedge(const AlgebroidModel& m, const EndValuedTwoForm& F, const Cochain& omega);

}  // namespace twistcoh

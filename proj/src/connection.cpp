// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/connection.hpp"

#include <algorithm>

namespace twistcoh {

std::vector<Poly> Connection::covariant(int i, const std::vector<Poly>& section) const {
    const AlgebroidModel& m = *model;
    std::vector<Poly> out(fiber, Poly(m.nvars));
    for (int c = 0; c < fiber; ++c) {
        out[c] = m.anchor_apply(i, section[c]);
        for (int a = 0; a < fiber; ++a) {
            const Poly& g = gamma[i - 1][a][c];
            if (!g.is_zero() && !section[a].is_zero()) out[c] += section[a] * g;
        }
    }
    return out;
}

bool EndValuedTwoForm::is_zero() const {
    for (auto& [ij, mat] : entries)
        for (auto& row : mat)
            for (auto& p : row)
                if (!p.is_zero()) return false;
    return true;
}

Connection trivial_connection(const AlgebroidModel& m) {
    Connection c;
    c.model = &m;
    c.fiber = 1;
    c.gamma.assign(m.rank, {{Poly(m.nvars)}});
    return c;
}

Connection theta_modified_connection(const AlgebroidModel& m, const Cochain& theta) {
    if (theta.degree != 1 || theta.fiber != 1)
        throw std::invalid_argument("theta_modified_connection: theta must be a scalar 1-cochain");
    Connection c;
    c.model = &m;
    c.fiber = 1;
    c.gamma.assign(m.rank, {{Poly(m.nvars)}});
    for (int i = 1; i <= m.rank; ++i) c.gamma[i - 1][0][0] = theta.at({i})[0];
    return c;
}

Connection build_connection(const AlgebroidModel& m, int fiber,
                            const std::vector<std::vector<std::vector<Poly>>>& gamma) {
    if ((int)gamma.size() != m.rank)
        throw ValidationError("connection: expected one Christoffel matrix per generator");
    for (auto& mat : gamma) {
        if ((int)mat.size() != fiber) throw ValidationError("connection: Christoffel matrix shape");
        for (auto& row : mat)
            if ((int)row.size() != fiber)
                throw ValidationError("connection: Christoffel matrix shape");
    }
    Connection c;
    c.model = &m;
    c.fiber = fiber;
    c.gamma = gamma;
    return c;
}

EndValuedTwoForm curvature(const Connection& conn) {
    const AlgebroidModel& m = *conn.model;
    int f = conn.fiber;
    EndValuedTwoForm F;
    F.fiber = f;
    for (int i = 1; i <= m.rank; ++i)
        for (int j = i + 1; j <= m.rank; ++j) {
            std::vector<std::vector<Poly>> mat(f, std::vector<Poly>(f, Poly(m.nvars)));
            Section c = m.bracket_coeffs(i, j);
            bool nonzero = false;
            for (int a = 0; a < f; ++a) {
                std::vector<Poly> va(f, Poly(m.nvars));
                va[a] = m.one_poly();
                std::vector<Poly> r = conn.covariant(i, conn.covariant(j, va));
                std::vector<Poly> s = conn.covariant(j, conn.covariant(i, va));
                for (int b = 0; b < f; ++b) {
                    mat[a][b] = r[b] - s[b];
                    for (int k = 1; k <= m.rank; ++k) {
                        if (c[k - 1].is_zero()) continue;
                        std::vector<Poly> t = conn.covariant(k, va);
                        mat[a][b] -= c[k - 1] * t[b];
                    }
                    if (!mat[a][b].is_zero()) nonzero = true;
                }
            }
            if (nonzero) F.entries.emplace(std::make_pair(i, j), std::move(mat));
        }
    return F;
}

FlatnessResult is_flat(const Connection& conn) {
    EndValuedTwoForm F = curvature(conn);
    FlatnessResult r;
    for (auto& [ij, mat] : F.entries) {
        bool nonzero = false;
        for (auto& row : mat)
            for (auto& p : row)
                if (!p.is_zero()) nonzero = true;
        if (nonzero) {
            r.flat = false;
            r.witness = ij;
            r.witness_matrix = mat;
            return r;
        }
    }
    return r;
}

Cochain cov_ext_d(const Connection& conn, const Cochain& omega) {
    const AlgebroidModel& m = *conn.model;
    if (omega.fiber != conn.fiber)
        throw std::invalid_argument("cov_ext_d: value rank mismatch");
    if (omega.rank != m.rank || omega.nvars != m.nvars)
        throw std::invalid_argument("cov_ext_d: cochain over a different model");
    int p = omega.degree;
    int f = conn.fiber;
    Cochain r = Cochain::zero(m.rank, m.nvars, p + 1, f);
    if (p + 1 > m.rank) return r;

    auto eval = [&](const std::vector<int>& idx) -> std::optional<std::pair<std::vector<Poly>, int>> {
        auto sorted = sort_with_sign(idx);
        if (!sorted) return std::nullopt;
        auto it = omega.values.find(sorted->first);
        if (it == omega.values.end()) return std::nullopt;
        return std::make_pair(it->second, sorted->second);
    };

    for (const ExtIndex& K : ext_basis(m.rank, p + 1)) {
        std::vector<Poly> acc(f, Poly(m.nvars));
        for (int i = 0; i <= p; ++i) {
            std::vector<int> rest;
            for (int t = 0; t <= p; ++t)
                if (t != i) rest.push_back(K[t]);
            auto v = eval(rest);
            if (!v) continue;
            std::vector<Poly> nab = conn.covariant(K[i], v->first);
            int sign = ((i % 2 == 0) ? 1 : -1) * v->second;
            for (int c = 0; c < f; ++c) acc[c] += sign < 0 ? -nab[c] : nab[c];
        }
        for (int i = 0; i <= p; ++i)
            for (int j = i + 1; j <= p; ++j) {
                Section c = m.bracket_coeffs(K[i], K[j]);
                std::vector<int> rest;
                for (int t = 0; t <= p; ++t)
                    if (t != i && t != j) rest.push_back(K[t]);
                for (int mm = 1; mm <= m.rank; ++mm) {
                    if (c[mm - 1].is_zero()) continue;
                    std::vector<int> idx;
                    idx.push_back(mm);
                    idx.insert(idx.end(), rest.begin(), rest.end());
                    auto v = eval(idx);
                    if (!v) continue;
                    int sign = (((i + j) % 2 == 0) ? 1 : -1) * v->second;
                    for (int b = 0; b < f; ++b) {
                        Poly term = c[mm - 1] * v->first[b];
                        acc[b] += sign < 0 ? -term : term;
                    }
                }
            }
        for (int b = 0; b < f; ++b) r.add(K, b, acc[b]);
    }
    return r;
}

Cochain end_form_wedge(const AlgebroidModel& m, const EndValuedTwoForm& F, const Cochain& omega) {
    if (omega.fiber != F.fiber) throw std::invalid_argument("end_form_wedge: fiber mismatch");
    Cochain r = Cochain::zero(omega.rank, omega.nvars, omega.degree + 2, omega.fiber);
    if (r.degree > r.rank) return r;
    for (auto& [ij, mat] : F.entries) {
        ExtIndex two{ij.first, ij.second};
        for (auto& [J, v] : omega.values) {
            auto mrg = wedge_merge(two, J);
            if (!mrg) continue;
            for (int b = 0; b < omega.fiber; ++b) {
                Poly acc(m.nvars);
                for (int a = 0; a < omega.fiber; ++a) {
                    if (mat[a][b].is_zero() || v[a].is_zero()) continue;
                    acc += mat[a][b] * v[a];
                }
                if (mrg->second < 0) acc = -acc;
                r.add(mrg->first, b, acc);
            }
        }
    }
    return r;
}

}  // namespace twistcoh

// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/model.hpp"

#include <algorithm>
#include <sstream>

namespace twistcoh {

VectorField vf_zero(int nvars) { return VectorField(nvars, Poly(nvars)); }

Poly vf_apply(const VectorField& x, const Poly& f) {
    Poly r(f.nvars());
    for (int k = 0; k < (int)x.size(); ++k) {
        if (x[k].is_zero()) continue;
        r += x[k] * f.derivative(k + 1);
    }
    return r;
}

VectorField vf_commutator(const VectorField& x, const VectorField& y) {
    int n = (int)x.size();
    VectorField r = vf_zero(n);
    for (int k = 0; k < n; ++k) {
        Poly yk(n), xk(n);
        // [X,Y]_k = X.(Y_k) - Y.(X_k)
        r[k] = vf_apply(x, y[k]) - vf_apply(y, x[k]);
    }
    return r;
}

Section AlgebroidModel::bracket_coeffs(int i, int j) const {
    Section out(rank, Poly(nvars));
    if (i == j) return out;
    bool flip = i > j;
    auto it = structure.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == structure.end()) return out;
    for (int k = 0; k < rank; ++k) out[k] = flip ? -it->second[k] : it->second[k];
    return out;
}

Poly AlgebroidModel::anchor_apply(int i, const Poly& f) const {
    return vf_apply(anchor[i - 1], f);
}

VectorField AlgebroidModel::anchor_of_section(const Section& s) const {
    VectorField r = vf_zero(nvars);
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < nvars; ++k) r[k] += s[i] * anchor[i][k];
    return r;
}

Section AlgebroidModel::section_bracket(const Section& s, const Section& t) const {
    Section out(rank, Poly(nvars));
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j) {
            Poly coeff = s[i - 1] * t[j - 1] - s[j - 1] * t[i - 1];
            if (coeff.is_zero()) continue;
            Section c = bracket_coeffs(i, j);
            for (int k = 0; k < rank; ++k) out[k] += coeff * c[k];
        }
    VectorField as = anchor_of_section(s), at = anchor_of_section(t);
    for (int m = 0; m < rank; ++m)
        out[m] += vf_apply(as, t[m]) - vf_apply(at, s[m]);
    return out;
}

// Detects the uniform weight shift and validates homogeneity of the data.
static int detect_shift(const AlgebroidModel& m) {
    std::optional<int> anchor_deg, struct_deg;
    for (int i = 0; i < m.rank; ++i)
        for (int k = 0; k < m.nvars; ++k) {
            const Poly& p = m.anchor[i][k];
            if (p.is_zero()) continue;
            auto d = p.homogeneous_degree();
            if (!d)
                throw ValidationError("anchor entry a(u" + std::to_string(i + 1) + ")[" +
                                      std::to_string(k + 1) + "] is not weight-homogeneous: " +
                                      p.str());
            if (anchor_deg && *anchor_deg != *d)
                throw ValidationError("anchor entries have non-uniform weight");
            anchor_deg = *d;
        }
    for (auto& [ij, c] : m.structure)
        for (int k = 0; k < m.rank; ++k) {
            const Poly& p = c[k];
            if (p.is_zero()) continue;
            auto d = p.homogeneous_degree();
            if (!d)
                throw ValidationError("structure function c_" + std::to_string(ij.first) +
                                      std::to_string(ij.second) + "^" + std::to_string(k + 1) +
                                      " is not weight-homogeneous: " + p.str());
            if (struct_deg && *struct_deg != *d)
                throw ValidationError("structure functions have non-uniform weight");
            struct_deg = *d;
        }
    if (anchor_deg && struct_deg && *anchor_deg - 1 != *struct_deg)
        throw ValidationError("anchor weight " + std::to_string(*anchor_deg) +
                              " and structure weight " + std::to_string(*struct_deg) +
                              " induce inconsistent shifts");
    if (anchor_deg) return *anchor_deg - 1;
    if (struct_deg) return *struct_deg;
    return 0;
}

static void require_valid(AlgebroidModel& m) {
    m.weight_shift = detect_shift(m);
    AxiomReport rep = check_axioms(m);
    if (!rep.ok) throw ValidationError(rep.violations.front());
}

AlgebroidModel build_lie_algebra(
    int rank, const std::map<std::pair<int, int>, std::vector<Rational>>& constants,
    const std::string& name) {
    AlgebroidModel m;
    m.kind = AlgebroidModel::Kind::lie_algebra;
    m.rank = rank;
    m.nvars = 0;
    m.name = name;
    m.anchor.assign(rank, vf_zero(0));
    for (auto& [ij, c] : constants) {
        auto [i, j] = ij;
        if (i < 1 || j <= i || j > rank)
            throw ValidationError("bracket pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of range");
        if ((int)c.size() != rank) throw ValidationError("structure constant vector length");
        Section s(rank, Poly(0));
        bool nonzero = false;
        for (int k = 0; k < rank; ++k) {
            s[k] = Poly::constant(0, c[k]);
            nonzero = nonzero || !c[k].is_zero();
        }
        if (nonzero) m.structure.emplace(ij, std::move(s));
    }
    require_valid(m);
    return m;
}

AlgebroidModel build_action_algebroid(
    const std::map<std::pair<int, int>, std::vector<Rational>>& g_constants, int g_rank,
    int nvars, const std::vector<VectorField>& action, const std::string& name) {
    if ((int)action.size() != g_rank)
        throw ValidationError("action: expected one vector field per Lie algebra generator");
    AlgebroidModel m;
    m.kind = AlgebroidModel::Kind::action;
    m.rank = g_rank;
    m.nvars = nvars;
    m.name = name;
    m.anchor = action;
    for (auto& vf : m.anchor)
        if ((int)vf.size() != nvars) throw ValidationError("action field component count");
    for (auto& [ij, c] : g_constants) {
        Section s(g_rank, Poly(nvars));
        bool nonzero = false;
        for (int k = 0; k < g_rank; ++k) {
            s[k] = Poly::constant(nvars, c[k]);
            nonzero = nonzero || !c[k].is_zero();
        }
        if (nonzero) m.structure.emplace(ij, std::move(s));
    }
    // homomorphism check: rho([xi_i,xi_j]) = [rho(xi_i), rho(xi_j)]
    for (int i = 1; i <= g_rank; ++i)
        for (int j = i + 1; j <= g_rank; ++j) {
            VectorField lhs = vf_zero(nvars);
            Section c = m.bracket_coeffs(i, j);
            for (int k = 0; k < g_rank; ++k)
                for (int x = 0; x < nvars; ++x) lhs[x] += c[k] * action[k][x];
            VectorField rhs = vf_commutator(action[i - 1], action[j - 1]);
            for (int x = 0; x < nvars; ++x)
                if (lhs[x] != rhs[x])
                    throw ValidationError("action is not a Lie algebra homomorphism on (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
        }
    require_valid(m);
    return m;
}

AlgebroidModel build_poisson_algebroid(const Multivector& pi, const std::string& name) {
    if (pi.degree != 2) throw ValidationError("poisson: pi must be a bivector");
    Multivector jac = schouten_bracket(pi, pi);
    if (!jac.is_zero())
        throw ValidationError("not Poisson: [pi,pi]_SN = " + jac.str());
    int n = pi.nvars;
    AlgebroidModel m;
    m.kind = AlgebroidModel::Kind::poisson;
    m.rank = n;
    m.nvars = n;
    m.name = name;
    m.anchor.resize(n);
    for (int i = 1; i <= n; ++i) {
        Cochain dxi = Cochain::zero(n, n, 1, 1);
        dxi.add({i}, 0, Poly::constant(n, Rational(1)));
        Multivector v = sharp(pi, dxi);
        VectorField vf = vf_zero(n);
        for (int k = 1; k <= n; ++k) vf[k - 1] = v.at({k});
        m.anchor[i - 1] = vf;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly pij = pi.at({i, j});
            Section s(n, Poly(n));
            bool nonzero = false;
            for (int k = 1; k <= n; ++k) {
                s[k - 1] = pij.derivative(k);
                nonzero = nonzero || !s[k - 1].is_zero();
            }
            if (nonzero) m.structure.emplace(std::make_pair(i, j), std::move(s));
        }
    require_valid(m);
    return m;
}

static bool section_is_zero(const Section& s) {
    return std::all_of(s.begin(), s.end(), [](const Poly& p) { return p.is_zero(); });
}

static std::string section_str(const Section& s) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < (int)s.size(); ++k) {
        if (s[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << s[k].str() << ")*e" << (k + 1);
    }
    return first ? "0" : os.str();
}

AxiomReport check_axioms(const AlgebroidModel& m, int window) {
    AxiomReport rep;
    int max_deg = 0;
    for (auto& [ij, c] : m.structure)
        for (auto& p : c) max_deg = std::max(max_deg, p.total_degree());
    for (auto& vf : m.anchor)
        for (auto& p : vf) max_deg = std::max(max_deg, p.total_degree());
    if (window < 0) window = max_deg + 2;
    rep.validation_window = window;

    auto gen = [&](int i) {
        Section s(m.rank, Poly(m.nvars));
        s[i - 1] = m.one_poly();
        return s;
    };
    auto jacobiator = [&](const Section& a, const Section& b, const Section& c) {
        Section r = m.section_bracket(m.section_bracket(a, b), c);
        Section t = m.section_bracket(m.section_bracket(b, c), a);
        Section u = m.section_bracket(m.section_bracket(c, a), b);
        for (int k = 0; k < m.rank; ++k) r[k] += t[k] + u[k];
        return r;
    };

    // Jacobi on generator triples
    for (int i = 1; i <= m.rank; ++i)
        for (int j = i + 1; j <= m.rank; ++j)
            for (int k = j + 1; k <= m.rank; ++k) {
                Section J = jacobiator(gen(i), gen(j), gen(k));
                if (!section_is_zero(J)) {
                    rep.ok = false;
                    rep.violations.push_back("Jacobi fails on (u" + std::to_string(i) + ",u" +
                                             std::to_string(j) + ",u" + std::to_string(k) +
                                             "): " + section_str(J));
                }
            }

    // anchor morphism: a([u_i,u_j]) = [a(u_i),a(u_j)]
    for (int i = 1; i <= m.rank; ++i)
        for (int j = i + 1; j <= m.rank; ++j) {
            VectorField lhs = m.anchor_of_section(m.bracket_coeffs(i, j));
            VectorField rhs = vf_commutator(m.anchor[i - 1], m.anchor[j - 1]);
            for (int x = 0; x < m.nvars; ++x)
                if (lhs[x] != rhs[x]) {
                    rep.ok = false;
                    rep.violations.push_back("anchor morphism fails on (u" + std::to_string(i) +
                                             ",u" + std::to_string(j) + ") component " +
                                             std::to_string(x + 1));
                }
        }

    if (m.nvars > 0) {
        // Leibniz rule and Jacobi with a monomial coefficient on one slot
        for (int d = 1; d <= window; ++d) {
            for (const Exponents& e : monomials_of_degree(m.nvars, d)) {
                Poly f = Poly::monomial(m.nvars, e, Rational(1));
                for (int i = 1; i <= m.rank; ++i)
                    for (int j = 1; j <= m.rank; ++j) {
                        if (i == j) continue;
                        Section fv = gen(j);
                        for (auto& p : fv) p = f * p;
                        Section lhs = m.section_bracket(gen(i), fv);
                        Section rhs = m.bracket_coeffs(i, j);
                        for (auto& p : rhs) p = f * p;
                        rhs[j - 1] += m.anchor_apply(i, f);
                        bool bad = false;
                        for (int k = 0; k < m.rank; ++k)
                            if (lhs[k] != rhs[k]) bad = true;
                        if (bad) {
                            rep.ok = false;
                            rep.violations.push_back("Leibniz rule fails on [u" +
                                                     std::to_string(i) + ", " + f.str() + "*u" +
                                                     std::to_string(j) + "]");
                        }
                    }
                for (int i = 1; i <= m.rank; ++i)
                    for (int j = i + 1; j <= m.rank; ++j)
                        for (int k = 1; k <= m.rank; ++k) {
                            Section fv = gen(k);
                            for (auto& p : fv) p = f * p;
                            Section J = jacobiator(gen(i), gen(j), fv);
                            if (!section_is_zero(J)) {
                                rep.ok = false;
                                rep.violations.push_back(
                                    "Jacobi fails on (u" + std::to_string(i) + ",u" +
                                    std::to_string(j) + "," + f.str() + "*u" + std::to_string(k) +
                                    "): " + section_str(J));
                            }
                        }
            }
        }
    }
    return rep;
}

Cochain algebroid_d(const AlgebroidModel& m, const Cochain& omega) {
    if (omega.fiber != 1) throw std::invalid_argument("algebroid_d: scalar cochains only");
    if (omega.rank != m.rank || omega.nvars != m.nvars)
        throw std::invalid_argument("algebroid_d: cochain over a different model");
    int p = omega.degree;
    Cochain r = Cochain::zero(m.rank, m.nvars, p + 1, 1);
    if (p + 1 > m.rank) return r;

    auto eval = [&](const std::vector<int>& idx) -> std::pair<Poly, bool> {
        auto sorted = sort_with_sign(idx);
        if (!sorted) return {Poly(m.nvars), false};
        auto it = omega.values.find(sorted->first);
        if (it == omega.values.end()) return {Poly(m.nvars), false};
        Poly v = it->second[0];
        if (sorted->second < 0) v = -v;
        return {std::move(v), true};
    };

    for (const ExtIndex& K : ext_basis(m.rank, p + 1)) {
        Poly acc(m.nvars);
        for (int i = 0; i <= p; ++i) {
            std::vector<int> rest;
            for (int t = 0; t <= p; ++t)
                if (t != i) rest.push_back(K[t]);
            auto [val, nz] = eval(rest);
            if (nz) {
                Poly term = m.anchor_apply(K[i], val);
                acc += (i % 2 == 0) ? term : -term;
            }
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
                    auto [val, nz] = eval(idx);
                    if (!nz) continue;
                    Poly term = c[mm - 1] * val;
                    acc += ((i + j) % 2 == 0) ? term : -term;
                }
            }
        r.add(K, 0, acc);
    }
    return r;
}

// The identification pairs the cotangent generator dx_i with -d/dx_i, so a
// degree-p cochain picks up (-1)^p.  Under this convention the algebroid
// differential of the cotangent algebroid of pi is -[pi, .] in the Schouten
// bracket implemented in cartan.cpp.
Multivector cochain_to_multivector(const Cochain& w) {
    if (w.fiber != 1) throw std::invalid_argument("cochain_to_multivector: scalar only");
    if (w.rank != w.nvars)
        throw std::invalid_argument("cochain_to_multivector: rank must equal nvars");
    Multivector mv = Multivector::zero(w.nvars, w.degree);
    bool flip = w.degree % 2 != 0;
    for (auto& [I, v] : w.values) mv.add(I, flip ? -v[0] : v[0]);
    return mv;
}

Cochain multivector_to_cochain(const AlgebroidModel& m, const Multivector& mv) {
    if (m.rank != mv.nvars || m.nvars != mv.nvars)
        throw std::invalid_argument("multivector_to_cochain: model mismatch");
    Cochain w = Cochain::zero(m.rank, m.nvars, mv.degree, 1);
    bool flip = mv.degree % 2 != 0;
    for (auto& [I, p] : mv.c) w.add(I, 0, flip ? -p : p);
    return w;
}

}  // namespace twistcoh

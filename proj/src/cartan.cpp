// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/cartan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twistcoh {

Multivector Multivector::zero(int nvars, int degree) {
    Multivector m;
    m.nvars = nvars;
    m.degree = degree;
    return m;
}

Multivector Multivector::from_function(const Poly& f) {
    Multivector m = zero(f.nvars(), 0);
    m.add({}, f);
    return m;
}

Multivector Multivector::coordinate_field(int nvars, int i) {
    Multivector m = zero(nvars, 1);
    m.add({i}, Poly::constant(nvars, Rational(1)));
    return m;
}

bool Multivector::is_zero() const {
    for (auto& [I, p] : c)
        if (!p.is_zero()) return false;
    return true;
}

void Multivector::add(const ExtIndex& I, const Poly& p) {
    if ((int)I.size() != degree) throw std::invalid_argument("Multivector::add: degree mismatch");
    if (p.is_zero()) return;
    auto [it, inserted] = c.emplace(I, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) c.erase(it);
    }
}

Poly Multivector::at(const ExtIndex& I) const {
    auto it = c.find(I);
    return it == c.end() ? Poly(nvars) : it->second;
}

Multivector Multivector::operator-() const {
    Multivector r = *this;
    for (auto& [I, p] : r.c) p = -p;
    return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (nvars != o.nvars || degree != o.degree)
        throw std::invalid_argument("Multivector: space mismatch");
    for (auto& [I, p] : o.c) add(I, p);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (nvars != o.nvars || degree != o.degree)
        throw std::invalid_argument("Multivector: space mismatch");
    for (auto& [I, p] : o.c) add(I, -p);
    return *this;
}

Multivector operator*(const Rational& r, const Multivector& m) {
    Multivector out = Multivector::zero(m.nvars, m.degree);
    if (r.is_zero()) return out;
    for (auto& [I, p] : m.c) out.add(I, r * p);
    return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
    if (a.nvars != b.nvars || a.degree != b.degree) return false;
    Multivector d = a;
    d -= b;
    return d.is_zero();
}

std::string Multivector::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [I, p] : c) {
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ")";
        if (!I.empty()) os << "*" << ext_str(I, 'd');
    }
    if (first) return "0";
    return os.str();
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("wedge: variable count mismatch");
    Multivector r = Multivector::zero(a.nvars, a.degree + b.degree);
    if (r.degree > r.nvars) return r;
    for (auto& [I, pa] : a.c)
        for (auto& [J, pb] : b.c) {
            auto m = wedge_merge(I, J);
            if (!m) continue;
            Poly prod = pa * pb;
            if (m->second < 0) prod = -prod;
            r.add(m->first, prod);
        }
    return r;
}

// Derivative with respect to the odd generator xi_i: removes i from the key.
// Left version carries (-1)^position, right version (-1)^(length-1-position).
static Multivector odd_derivative(const Multivector& P, int i, bool from_left) {
    Multivector r = Multivector::zero(P.nvars, P.degree - 1);
    for (auto& [I, p] : P.c) {
        auto it = std::find(I.begin(), I.end(), i);
        if (it == I.end()) continue;
        int pos = (int)(it - I.begin());
        if (!from_left) pos = (int)I.size() - 1 - pos;
        ExtIndex J;
        for (int x : I)
            if (x != i) J.push_back(x);
        r.add(J, pos % 2 == 0 ? p : -p);
    }
    return r;
}

static Multivector coeff_derivative(const Multivector& P, int i) {
    Multivector r = Multivector::zero(P.nvars, P.degree);
    for (auto& [I, p] : P.c) r.add(I, p.derivative(i));
    return r;
}

// Canonical odd Poisson bracket of the (x_i, xi_i) calculus:
// [P,Q] = sum_i dP/dxi_i(right) ^ dQ/dx_i  -  dP/dx_i ^ dQ/dxi_i(left).
// This is the unique graded-antisymmetric biderivation with [X,f] = X.f and
// [X,Y] the vector-field commutator.
Multivector schouten_bracket(const Multivector& P, const Multivector& Q) {
    if (P.nvars != Q.nvars) throw std::invalid_argument("schouten_bracket: variable count mismatch");
    Multivector r = Multivector::zero(P.nvars, P.degree + Q.degree - 1);
    for (int i = 1; i <= P.nvars; ++i) {
        Multivector a = odd_derivative(P, i, /*from_left=*/false);
        if (!a.is_zero()) {
            Multivector b = coeff_derivative(Q, i);
            if (!b.is_zero()) r += wedge(a, b);
        }
        Multivector c = coeff_derivative(P, i);
        if (!c.is_zero()) {
            Multivector d = odd_derivative(Q, i, /*from_left=*/true);
            if (!d.is_zero()) r -= wedge(c, d);
        }
    }
    return r;
}

Cochain form_from_function(int nvars, const Poly& f) {
    Cochain w = Cochain::zero(nvars, nvars, 0, 1);
    w.add({}, 0, f);
    return w;
}

Cochain derham_d(const Cochain& form) {
    if (form.rank != form.nvars)
        throw std::invalid_argument("derham_d: expected a form over R^n (rank == nvars)");
    if (form.fiber != 1) throw std::invalid_argument("derham_d: scalar forms only");
    Cochain r = Cochain::zero(form.rank, form.nvars, form.degree + 1, 1);
    for (auto& [I, v] : form.values)
        for (int k = 1; k <= form.nvars; ++k) {
            Poly df = v[0].derivative(k);
            if (df.is_zero()) continue;
            auto m = wedge_merge({k}, I);
            if (!m) continue;
            r.add(m->first, 0, m->second < 0 ? -df : df);
        }
    return r;
}

Cochain interior_product(const Multivector& X, const Cochain& form) {
    if (X.degree != 1) throw std::invalid_argument("interior_product: X must have degree 1");
    if (X.nvars != form.nvars)
        throw std::invalid_argument("interior_product: variable count mismatch");
    Cochain r = Cochain::zero(form.rank, form.nvars, std::max(form.degree - 1, 0), form.fiber);
    if (form.degree == 0) return r;
    for (auto& [I, p] : X.c) {
        Cochain contracted = contract_generator(form, I[0]);
        if (contracted.is_zero()) continue;
        r += p * contracted;
    }
    return r;
}

Cochain lie_derivative(const Multivector& X, const Cochain& form) {
    Cochain a = interior_product(X, derham_d(form));
    if (form.degree == 0) return a;
    Cochain b = derham_d(interior_product(X, form));
    return a + b;
}

Poly bivector_pairing(const Multivector& pi, const Cochain& alpha, const Cochain& beta) {
    if (pi.degree != 2) throw std::invalid_argument("bivector_pairing: pi must be a bivector");
    if (alpha.degree != 1 || beta.degree != 1)
        throw std::invalid_argument("bivector_pairing: expected 1-forms");
    Poly r(pi.nvars);
    for (auto& [I, p] : pi.c) {
        int i = I[0], j = I[1];
        const Poly ai = alpha.at({i})[0], aj = alpha.at({j})[0];
        const Poly bi = beta.at({i})[0], bj = beta.at({j})[0];
        r += p * (ai * bj - aj * bi);
    }
    return r;
}

Multivector sharp(const Multivector& pi, const Cochain& alpha) {
    if (pi.degree != 2) throw std::invalid_argument("sharp: pi must be a bivector");
    Multivector v = Multivector::zero(pi.nvars, 1);
    for (auto& [I, p] : pi.c) {
        int i = I[0], j = I[1];
        // pi_ij with i<j; pi_ji = -pi_ij
        v.add({j}, alpha.at({i})[0] * p);
        v.add({i}, -(alpha.at({j})[0] * p));
    }
    return v;
}

}  // namespace twistcoh

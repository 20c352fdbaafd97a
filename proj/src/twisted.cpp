// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/twisted.hpp"

#include <sstream>

namespace twistcoh {

MixedForm MixedForm::zero(int rank, int nvars, int fiber) {
    MixedForm f;
    f.rank = rank;
    f.nvars = nvars;
    f.fiber = fiber;
    return f;
}

MixedForm MixedForm::from_cochain(const Cochain& w) {
    MixedForm f = zero(w.rank, w.nvars, w.fiber);
    f.set_component(w);
    return f;
}

bool MixedForm::is_zero() const {
    for (auto& [d, w] : comp)
        if (!w.is_zero()) return false;
    return true;
}

bool MixedForm::is_odd() const {
    for (auto& [d, w] : comp)
        if (d % 2 == 0 && !w.is_zero()) return false;
    return true;
}

bool MixedForm::is_even() const {
    for (auto& [d, w] : comp)
        if (d % 2 == 1 && !w.is_zero()) return false;
    return true;
}

void MixedForm::set_component(const Cochain& w) {
    if (w.rank != rank || w.nvars != nvars || w.fiber != fiber)
        throw std::invalid_argument("MixedForm::set_component: space mismatch");
    if (w.is_zero())
        comp.erase(w.degree);
    else
        comp[w.degree] = w;
}

Cochain MixedForm::component(int degree) const {
    auto it = comp.find(degree);
    if (it != comp.end()) return it->second;
    return Cochain::zero(rank, nvars, degree, fiber);
}

MixedForm MixedForm::operator-() const {
    MixedForm r = *this;
    for (auto& [d, w] : r.comp) w = -w;
    return r;
}

MixedForm& MixedForm::operator+=(const MixedForm& o) {
    if (rank != o.rank || nvars != o.nvars || fiber != o.fiber)
        throw std::invalid_argument("MixedForm: space mismatch");
    for (auto& [d, w] : o.comp) set_component(component(d) + w);
    return *this;
}

MixedForm& MixedForm::operator-=(const MixedForm& o) {
    if (rank != o.rank || nvars != o.nvars || fiber != o.fiber)
        throw std::invalid_argument("MixedForm: space mismatch");
    for (auto& [d, w] : o.comp) set_component(component(d) - w);
    return *this;
}

MixedForm operator*(const Rational& c, const MixedForm& w) {
    MixedForm r = MixedForm::zero(w.rank, w.nvars, w.fiber);
    if (c.is_zero()) return r;
    for (auto& [d, x] : w.comp) r.set_component(c * x);
    return r;
}

bool operator==(const MixedForm& a, const MixedForm& b) {
    if (a.rank != b.rank || a.nvars != b.nvars || a.fiber != b.fiber) return false;
    MixedForm d = a;
    d -= b;
    return d.is_zero();
}

std::string MixedForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [d, w] : comp) {
        if (w.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << w.str();
    }
    return first ? "0" : os.str();
}

MixedForm wedge(const MixedForm& a, const MixedForm& b) {
    if (a.fiber != 1) throw std::invalid_argument("wedge(MixedForm): left operand must be scalar");
    MixedForm r = MixedForm::zero(b.rank, b.nvars, b.fiber);
    for (auto& [da, wa] : a.comp)
        for (auto& [db, wb] : b.comp) {
            if (da + db > r.rank) continue;
            r.set_component(r.component(da + db) + wedge(wa, wb));
        }
    return r;
}

MixedForm cov_ext_d(const Connection& conn, const MixedForm& omega) {
    MixedForm r = MixedForm::zero(omega.rank, omega.nvars, omega.fiber);
    for (auto& [d, w] : omega.comp) r.set_component(r.component(d + 1) + cov_ext_d(conn, w));
    return r;
}

MixedForm algebroid_d(const AlgebroidModel& m, const MixedForm& omega) {
    MixedForm r = MixedForm::zero(omega.rank, omega.nvars, omega.fiber);
    for (auto& [d, w] : omega.comp) r.set_component(r.component(d + 1) + algebroid_d(m, w));
    return r;
}

MixedForm twisted_d_unchecked(const Connection& conn, const MixedForm& theta,
                              const MixedForm& omega) {
    MixedForm r = cov_ext_d(conn, omega);
    r += wedge(theta, omega);
    return r;
}

MixedForm twisted_d(const Connection& conn, const MixedForm& theta, const MixedForm& omega) {
    if (!theta.is_odd()) throw ValidationError("twisted differential: theta must be odd");
    FlatnessResult fl = is_flat(conn);
    if (!fl.flat)
        throw ValidationError("twisted differential: connection is not flat, witness (u" +
                              std::to_string(fl.witness.first) + ",u" +
                              std::to_string(fl.witness.second) + ")");
    MixedForm dtheta = algebroid_d(*conn.model, theta);
    if (!dtheta.is_zero())
        throw ValidationError("twisted differential: theta is not closed, d theta = " +
                              dtheta.str());
    return twisted_d_unchecked(conn, theta, omega);
}

std::vector<Cochain> basis_cochains(const AlgebroidModel& m, int fiber, int max_weight) {
    std::vector<Cochain> out;
    int wmax = m.nvars == 0 ? 0 : max_weight;
    for (int p = 0; p <= m.rank; ++p)
        for (const ExtIndex& I : ext_basis(m.rank, p))
            for (int a = 0; a < fiber; ++a)
                for (int w = 0; w <= wmax; ++w)
                    for (const Exponents& e : monomials_of_degree(m.nvars, w)) {
                        Cochain c = Cochain::zero(m.rank, m.nvars, p, fiber);
                        c.add(I, a, Poly::monomial(m.nvars, e, Rational(1)));
                        out.push_back(std::move(c));
                    }
    return out;
}

SquareZeroReport check_square_zero(const Connection& conn, const MixedForm& theta,
                                   int max_weight) {
    const AlgebroidModel& m = *conn.model;
    SquareZeroReport rep;
    MixedForm dtheta = algebroid_d(m, theta);
    for (const Cochain& b : basis_cochains(m, conn.fiber, max_weight)) {
        MixedForm w = MixedForm::from_cochain(b);
        MixedForm dd = twisted_d_unchecked(conn, theta, twisted_d_unchecked(conn, theta, w));
        ++rep.probes;
        if (!dd.is_zero()) {
            rep.all_zero = false;
            rep.witnesses.push_back("d[theta]^2 (" + b.str() + ") = " + dd.str());
        }
        MixedForm expect = wedge(dtheta, w);
        if (dd != expect) rep.defect_matches_dtheta = false;
    }
    return rep;
}

MixedForm exp_wedge(const MixedForm& psi, const MixedForm& omega) {
    if (psi.fiber != 1 || !psi.is_even())
        throw ValidationError("exp_wedge: psi must be a scalar even form");
    if (!psi.component(0).is_zero())
        throw ValidationError(
            "exp_wedge: psi has a nonzero degree-0 part; scalar exponentials are not exact");
    MixedForm result = omega;
    MixedForm power = omega;  // psi^k/k! ^ omega
    Rational factorial(1);
    for (int k = 1; k <= psi.rank; ++k) {
        power = wedge(psi, power);
        if (power.is_zero()) break;
        factorial *= Rational(k);
        result += (Rational(1) / factorial) * power;
    }
    return result;
}

ConjugationReport verify_conjugation(const Connection& conn, const MixedForm& theta,
                                     const MixedForm& psi, int max_weight) {
    const AlgebroidModel& m = *conn.model;
    ConjugationReport rep;
    MixedForm dpsi = algebroid_d(m, psi);
    MixedForm theta2 = theta + dpsi;

    // standalone identity d exp(Psi) = exp(Psi) ^ d Psi
    MixedForm one = MixedForm::zero(m.rank, m.nvars, 1);
    Cochain unit = Cochain::zero(m.rank, m.nvars, 0, 1);
    unit.add({}, 0, m.one_poly());
    one.set_component(unit);
    MixedForm exp_psi = exp_wedge(psi, one);
    if (algebroid_d(m, exp_psi) != wedge(exp_psi, dpsi)) {
        rep.d_exp_identity = false;
        rep.ok = false;
    }

    for (const Cochain& b : basis_cochains(m, conn.fiber, max_weight)) {
        MixedForm w = MixedForm::from_cochain(b);
        MixedForm lhs = twisted_d_unchecked(conn, theta, exp_wedge(psi, w));
        MixedForm rhs = exp_wedge(psi, twisted_d_unchecked(conn, theta2, w));
        ++rep.probes;
        if (lhs != rhs) {
            rep.ok = false;
            rep.witnesses.push_back("conjugation fails on " + b.str());
        }
    }
    return rep;
}

}  // namespace twistcoh

// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistcoh {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::invalid_argument("Poly::variable: index out of range");
    Exponents e(nvars, 0);
    e[i - 1] = 1;
    return monomial(nvars, e, Rational(1));
}

Poly Poly::monomial(int nvars, const Exponents& e, const Rational& c) {
    if ((int)e.size() != nvars) throw std::invalid_argument("Poly::monomial: exponent length");
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && std::accumulate(terms_.begin()->first.begin(),
                                                 terms_.begin()->first.end(), 0) == 0;
}

Rational Poly::constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if ((int)e.size() != nvars_) throw std::invalid_argument("Poly::add_term: exponent length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly r(a.nvars_);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            Exponents e(a.nvars_);
            for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly r(p.nvars_);
    if (c.is_zero()) return r;
    for (auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Poly Poly::derivative(int i) const {
    if (i < 1 || i > nvars_) throw std::invalid_argument("Poly::derivative: index out of range");
    Poly r(nvars_);
    for (auto& [e, c] : terms_) {
        if (e[i - 1] == 0) continue;
        Exponents d = e;
        d[i - 1] -= 1;
        r.add_term(d, Rational(e[i - 1]) * c);
    }
    return r;
}

int Poly::total_degree() const {
    int d = -1;
    for (auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

std::optional<int> Poly::homogeneous_degree() const {
    std::optional<int> d;
    for (auto& [e, c] : terms_) {
        int t = std::accumulate(e.begin(), e.end(), 0);
        if (d && *d != t) return std::nullopt;
        d = t;
    }
    return d;
}

Poly Poly::homogeneous_part(int d) const {
    Poly r(nvars_);
    for (auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first reads better; iterate in reverse grlex
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool any_var = std::accumulate(e.begin(), e.end(), 0) > 0;
        bool wrote = false;
        if (!a.is_one() || !any_var) { os << a.str(); wrote = true; }
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (wrote) os << "*";
            os << "x" << (k + 1);
            if (e[k] > 1) os << "^" << e[k];
            wrote = true;
        }
    }
    return os.str();
}

static void monomials_rec(int nvars, int pos, int left, Exponents& cur,
                          std::vector<Exponents>& out) {
    if (pos == nvars) {
        if (left == 0) out.push_back(cur);
        return;
    }
    if (pos == nvars - 1) {
        cur[pos] = left;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int k = left; k >= 0; --k) {
        cur[pos] = k;
        monomials_rec(nvars, pos + 1, left - k, cur, out);
        cur[pos] = 0;
    }
}

std::vector<Exponents> monomials_of_degree(int nvars, int d) {
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Exponents{});
        return out;
    }
    Exponents cur(nvars, 0);
    monomials_rec(nvars, 0, d, cur, out);
    // make ordering grlex-ascending for determinism
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        return GrlexLess{}(a, b);
    });
    return out;
}

}  // namespace twistcoh

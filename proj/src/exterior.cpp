// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/exterior.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace twistcoh {

std::optional<std::pair<ExtIndex, int>> sort_with_sign(std::vector<int> idx) {
    int sign = 1;
    // insertion sort, counting transpositions
    for (size_t i = 1; i < idx.size(); ++i) {
        int v = idx[i];
        size_t j = i;
        while (j > 0 && idx[j - 1] > v) {
            idx[j] = idx[j - 1];
            --j;
            sign = -sign;
        }
        idx[j] = v;
    }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return std::nullopt;
    return std::make_pair(std::move(idx), sign);
}

std::optional<std::pair<ExtIndex, int>> wedge_merge(const ExtIndex& I, const ExtIndex& J) {
    std::vector<int> cat;
    cat.reserve(I.size() + J.size());
    cat.insert(cat.end(), I.begin(), I.end());
    cat.insert(cat.end(), J.begin(), J.end());
    return sort_with_sign(std::move(cat));
}

std::vector<ExtIndex> ext_basis(int r, int p) {
    std::vector<ExtIndex> out;
    if (p < 0 || p > r) return out;
    ExtIndex cur(p);
    // lexicographic enumeration of p-subsets of {1..r}
    std::vector<int> stack;
    std::function<void(int, int)> rec = [&](int start, int pos) {
        if (pos == p) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= r - (p - pos - 1); ++v) {
            cur[pos] = v;
            rec(v + 1, pos + 1);
        }
    };
    rec(1, 0);
    return out;
}

std::string ext_str(const ExtIndex& I, char gen) {
    if (I.empty()) return "1";
    std::ostringstream os;
    for (size_t k = 0; k < I.size(); ++k) {
        if (k) os << "^";
        os << gen << I[k];
    }
    return os.str();
}

Cochain Cochain::zero(int rank, int nvars, int degree, int fiber) {
    Cochain w;
    w.rank = rank;
    w.nvars = nvars;
    w.degree = degree;
    w.fiber = fiber;
    return w;
}

Cochain Cochain::basis(int rank, int nvars, const ExtIndex& I) {
    Cochain w = zero(rank, nvars, (int)I.size(), 1);
    w.add(I, 0, Poly::constant(nvars, Rational(1)));
    return w;
}

bool Cochain::is_zero() const {
    for (auto& [I, v] : values)
        for (auto& p : v)
            if (!p.is_zero()) return false;
    return true;
}

void Cochain::add(const ExtIndex& I, int a, const Poly& p) {
    if ((int)I.size() != degree) throw std::invalid_argument("Cochain::add: degree mismatch");
    if (a < 0 || a >= fiber) throw std::invalid_argument("Cochain::add: fiber index");
    if (p.is_zero()) return;
    auto it = values.find(I);
    if (it == values.end())
        it = values.emplace(I, std::vector<Poly>(fiber, Poly(nvars))).first;
    it->second[a] += p;
    bool all_zero = std::all_of(it->second.begin(), it->second.end(),
                                [](const Poly& q) { return q.is_zero(); });
    if (all_zero) values.erase(it);
}

std::vector<Poly> Cochain::at(const ExtIndex& I) const {
    auto it = values.find(I);
    if (it != values.end()) return it->second;
    return std::vector<Poly>(fiber, Poly(nvars));
}

Cochain Cochain::operator-() const {
    Cochain r = *this;
    for (auto& [I, v] : r.values)
        for (auto& p : v) p = -p;
    return r;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (!same_space(o)) throw std::invalid_argument("Cochain: space mismatch");
    for (auto& [I, v] : o.values)
        for (int a = 0; a < fiber; ++a) add(I, a, v[a]);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (!same_space(o)) throw std::invalid_argument("Cochain: space mismatch");
    for (auto& [I, v] : o.values)
        for (int a = 0; a < fiber; ++a) add(I, a, -v[a]);
    return *this;
}

Cochain operator*(const Rational& c, const Cochain& w) {
    Cochain r = Cochain::zero(w.rank, w.nvars, w.degree, w.fiber);
    if (c.is_zero()) return r;
    for (auto& [I, v] : w.values)
        for (int a = 0; a < w.fiber; ++a) r.add(I, a, c * v[a]);
    return r;
}

Cochain operator*(const Poly& f, const Cochain& w) {
    Cochain r = Cochain::zero(w.rank, w.nvars, w.degree, w.fiber);
    for (auto& [I, v] : w.values)
        for (int a = 0; a < w.fiber; ++a) r.add(I, a, f * v[a]);
    return r;
}

bool operator==(const Cochain& a, const Cochain& b) {
    if (!a.same_space(b)) return false;
    return (a - b).is_zero();
}

std::optional<int> Cochain::homogeneous_weight() const {
    std::optional<int> w;
    for (auto& [I, v] : values)
        for (auto& p : v) {
            if (p.is_zero()) continue;
            auto d = p.homogeneous_degree();
            if (!d) return std::nullopt;
            if (w && *w != *d) return std::nullopt;
            w = *d;
        }
    return w;
}

std::string Cochain::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [I, v] : values) {
        for (int a = 0; a < fiber; ++a) {
            if (v[a].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << v[a].str() << ")";
            if (!I.empty()) os << "*" << ext_str(I);
            if (fiber > 1) os << "*v" << (a + 1);
        }
    }
    if (first) return "0";
    return os.str();
}

Cochain wedge(const Cochain& a, const Cochain& b) {
    if (a.rank != b.rank || a.nvars != b.nvars)
        throw std::invalid_argument("wedge: operands live over different models");
    if (a.fiber != 1 && b.fiber != 1)
        throw std::invalid_argument("wedge: both operands vector-valued");
    int fiber = std::max(a.fiber, b.fiber);
    Cochain r = Cochain::zero(a.rank, a.nvars, a.degree + b.degree, fiber);
    if (r.degree > r.rank) return r;
    for (auto& [I, va] : a.values)
        for (auto& [J, vb] : b.values) {
            auto m = wedge_merge(I, J);
            if (!m) continue;
            const auto& [K, sign] = *m;
            for (int c = 0; c < fiber; ++c) {
                const Poly& pa = a.fiber == 1 ? va[0] : va[c];
                const Poly& pb = b.fiber == 1 ? vb[0] : vb[c];
                Poly prod = pa * pb;
                if (sign < 0) prod = -prod;
                r.add(K, c, prod);
            }
        }
    return r;
}

Cochain contract_generator(const Cochain& w, int i) {
    Cochain r = Cochain::zero(w.rank, w.nvars, w.degree - 1, w.fiber);
    if (w.degree == 0) return Cochain::zero(w.rank, w.nvars, 0, w.fiber);
    for (auto& [I, v] : w.values) {
        auto it = std::find(I.begin(), I.end(), i);
        if (it == I.end()) continue;
        int pos = (int)(it - I.begin());
        ExtIndex J;
        J.reserve(I.size() - 1);
        for (int x : I)
            if (x != i) J.push_back(x);
        int sign = (pos % 2 == 0) ? 1 : -1;
        for (int a = 0; a < w.fiber; ++a)
            r.add(J, a, sign < 0 ? -v[a] : v[a]);
    }
    return r;
}

}  // namespace twistcoh

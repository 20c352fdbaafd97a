// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <omp.h>

namespace twistcoh {

namespace {

using Key = std::tuple<ExtIndex, int, Exponents>;

std::vector<BasisElem> space_basis(const AlgebroidModel& m, int fiber, int p, int w) {
    std::vector<BasisElem> out;
    if (p < 0 || p > m.rank || w < 0) return out;
    if (m.nvars == 0 && w != 0) return out;
    for (const ExtIndex& I : ext_basis(m.rank, p))
        for (int a = 0; a < fiber; ++a)
            for (const Exponents& e : monomials_of_degree(m.nvars, w))
                out.push_back(BasisElem{I, a, e});
    return out;
}

struct SpaceIndex {
    std::map<Key, int> index;
    int dim = 0;

    void append(const std::vector<BasisElem>& basis) {
        for (const BasisElem& b : basis) index.emplace(Key{b.I, b.a, b.e}, dim++);
    }
};

// Writes the coordinates of a cochain into v. strict: every nonzero term
// must hit a basis slot; otherwise out-of-space terms are dropped
// (projection onto the window).
void accumulate_coords(const SpaceIndex& si, const Cochain& w, QVector& v, bool strict) {
    for (auto& [I, vals] : w.values)
        for (int a = 0; a < w.fiber; ++a)
            for (auto& [e, c] : vals[a].terms()) {
                auto it = si.index.find(Key{I, a, e});
                if (it == si.index.end()) {
                    if (strict)
                        throw InternalError("cochain term escapes its weight-homogeneous space");
                    continue;
                }
                v[it->second] += c;
            }
}

void accumulate_coords(const SpaceIndex& si, const MixedForm& w, QVector& v, bool strict) {
    for (auto& [d, comp] : w.comp) accumulate_coords(si, comp, v, strict);
}

Cochain single_cochain(const AlgebroidModel& m, int fiber, int p, const BasisElem& b) {
    Cochain c = Cochain::zero(m.rank, m.nvars, p, fiber);
    c.add(b.I, b.a, Poly::monomial(m.nvars, b.e, Rational(1)));
    return c;
}

// Differential of the complex: cov_ext_d plus the optional twist wedge.
MixedForm apply_operator(const ComplexSpec& spec, const MixedForm& w) {
    if (spec.theta.is_zero()) return cov_ext_d(*spec.conn, w);
    return twisted_d_unchecked(*spec.conn, spec.theta, w);
}

// Representatives modulo an image row space, echelon-canonical.
std::vector<QVector> pick_representatives(const std::vector<QVector>& kernel, RowSpace image) {
    std::vector<QVector> reps;
    for (const QVector& k : kernel) {
        QVector red = image.reduce(k);
        if (is_zero(red)) continue;
        reps.push_back(red);
        image.insert(red);
    }
    return reps;
}

// theta components as (degree, weight); nullopt when some component is not
// weight-homogeneous.
std::optional<std::vector<std::pair<int, int>>> theta_shifts(const MixedForm& theta) {
    std::vector<std::pair<int, int>> out;
    for (auto& [d, w] : theta.comp) {
        if (w.is_zero()) continue;
        auto h = w.homogeneous_weight();
        if (!h) return std::nullopt;
        out.emplace_back(d, *h);
    }
    return out;
}

bool line_mode_possible(const ComplexSpec& spec) {
    if (spec.theta.is_zero()) return true;
    auto sh = theta_shifts(spec.theta);
    if (!sh) return false;
    int s = spec.model->weight_shift;
    for (auto& [k, t] : *sh)
        if (t != k * s) return false;
    return true;
}

std::vector<int> line_indices(const AlgebroidModel& m, int window) {
    if (m.nvars == 0) return {0};
    std::set<int> ls;
    int s = m.weight_shift;
    for (int p = 0; p <= m.rank; ++p)
        for (int w = 0; w <= window; ++w) ls.insert(w - p * s);
    return std::vector<int>(ls.begin(), ls.end());
}

LineComplex build_line(const ComplexSpec& spec, int line) {
    const AlgebroidModel& m = *spec.model;
    int fiber = spec.conn->fiber;
    int s = m.weight_shift;
    LineComplex lc;
    lc.line = line;
    lc.weights.resize(m.rank + 1);
    lc.bases.resize(m.rank + 1);
    for (int p = 0; p <= m.rank; ++p) {
        lc.weights[p] = line + p * s;
        lc.bases[p] = space_basis(m, fiber, p, lc.weights[p]);
    }
    lc.d.resize(m.rank + 1);
    for (int p = 0; p <= m.rank; ++p) {
        int rows = p + 1 <= m.rank ? (int)lc.bases[p + 1].size() : 0;
        QMatrix mat = QMatrix::zero(rows, (int)lc.bases[p].size());
        SpaceIndex target;
        if (p + 1 <= m.rank) target.append(lc.bases[p + 1]);
        for (int col = 0; col < (int)lc.bases[p].size(); ++col) {
            Cochain c = single_cochain(m, fiber, p, lc.bases[p][col]);
            Cochain dc = cov_ext_d(*spec.conn, c);
            QVector v(rows, Rational(0));
            accumulate_coords(target, dc, v, true);
            for (int rr = 0; rr < rows; ++rr) mat.a[rr][col] = v[rr];
        }
        lc.d[p] = std::move(mat);
    }
    return lc;
}

LineResult graded_line_result(const ComplexSpec& spec, const LineComplex& lc) {
    const AlgebroidModel& m = *spec.model;
    int fiber = spec.conn->fiber;
    LineResult res;
    res.line = lc.line;
    res.weights = lc.weights;
    res.entries.resize(m.rank + 1);
    int euler_dim = 0, euler_betti = 0;
    for (int p = 0; p <= m.rank; ++p) {
        BettiEntry& entry = res.entries[p];
        entry.dim_space = (int)lc.bases[p].size();
        RankKernel kk = rank_and_kernel(lc.d[p]);
        RowSpace image((int)lc.bases[p].size());
        if (p > 0)
            for (int col = 0; col < lc.d[p - 1].cols; ++col) {
                QVector im(lc.d[p - 1].rows, Rational(0));
                for (int rr = 0; rr < lc.d[p - 1].rows; ++rr) im[rr] = lc.d[p - 1].a[rr][col];
                image.insert(std::move(im));
            }
        std::vector<QVector> reps = pick_representatives(kk.kernel_basis, image);
        entry.betti = (int)kk.kernel_basis.size() - image.dim();
        if (entry.betti != (int)reps.size())
            throw InternalError("betti dimension disagrees with representative count");
        for (const QVector& r : reps) {
            Cochain c = Cochain::zero(m.rank, m.nvars, p, fiber);
            for (int k = 0; k < (int)r.size(); ++k) {
                if (r[k].is_zero()) continue;
                const BasisElem& b = lc.bases[p][k];
                c.add(b.I, b.a, Poly::monomial(m.nvars, b.e, r[k]));
            }
            entry.reps.push_back(MixedForm::from_cochain(c));
        }
        entry.stable = true;
        int sign = p % 2 == 0 ? 1 : -1;
        euler_dim += sign * entry.dim_space;
        euler_betti += sign * entry.betti;
    }
    res.euler_sides = {euler_dim, euler_betti};
    return res;
}

// Z/2-graded computation on an explicit list of (degree, weight) spaces.
// project: drop operator output escaping the listed spaces (truncated mode);
// otherwise escaping output is an internal error.
LineResult parity_result(const ComplexSpec& spec, int line_label,
                         const std::vector<std::pair<int, int>>& spaces, bool project) {
    const AlgebroidModel& m = *spec.model;
    int fiber = spec.conn->fiber;

    std::vector<std::pair<int, int>> even, odd;
    for (auto& pw : spaces) (pw.first % 2 == 0 ? even : odd).push_back(pw);

    struct Block {
        std::vector<std::pair<int, BasisElem>> elems;  // (degree, basis elem)
    };
    auto build_block = [&](const std::vector<std::pair<int, int>>& pws) {
        Block blk;
        for (auto& [p, w] : pws) {
            auto basis = space_basis(m, fiber, p, w);
            for (auto& b : basis) blk.elems.emplace_back(p, b);
        }
        return blk;
    };
    Block be = build_block(even), bo = build_block(odd);

    // keys carry the degree: equal (I, a, e) can occur at several degrees
    auto make_index = [&](const Block& blk) {
        std::map<std::pair<int, Key>, int> idx;
        for (int k = 0; k < (int)blk.elems.size(); ++k) {
            auto& [p, b] = blk.elems[k];
            idx.emplace(std::make_pair(p, Key{b.I, b.a, b.e}), k);
        }
        return idx;
    };
    auto idx_even = make_index(be), idx_odd = make_index(bo);

    auto to_coords = [&](const std::map<std::pair<int, Key>, int>& idx, int dim,
                         const MixedForm& w) {
        QVector v(dim, Rational(0));
        for (auto& [d, comp] : w.comp)
            for (auto& [I, vals] : comp.values)
                for (int a = 0; a < fiber; ++a)
                    for (auto& [e, c] : vals[a].terms()) {
                        auto it = idx.find(std::make_pair(d, Key{I, a, e}));
                        if (it == idx.end()) {
                            if (!project)
                                throw InternalError("twisted term escapes its weight line");
                            continue;
                        }
                        v[it->second] += c;
                    }
        return v;
    };

    auto build_matrix = [&](const Block& src, const std::map<std::pair<int, Key>, int>& dst_idx,
                            int dst_dim) {
        QMatrix mat = QMatrix::zero(dst_dim, (int)src.elems.size());
        for (int col = 0; col < (int)src.elems.size(); ++col) {
            auto& [p, b] = src.elems[col];
            MixedForm w = MixedForm::from_cochain(single_cochain(m, fiber, p, b));
            MixedForm dw = apply_operator(spec, w);
            QVector v = to_coords(dst_idx, dst_dim, dw);
            for (int rr = 0; rr < dst_dim; ++rr) mat.a[rr][col] = v[rr];
        }
        return mat;
    };

    QMatrix d_even = build_matrix(be, idx_odd, (int)bo.elems.size());
    QMatrix d_odd = build_matrix(bo, idx_even, (int)be.elems.size());

    auto block_entry = [&](const Block& blk, const QMatrix& out, const QMatrix& in) {
        BettiEntry entry;
        entry.dim_space = (int)blk.elems.size();
        RankKernel kk = rank_and_kernel(out);
        RowSpace image((int)blk.elems.size());
        for (int col = 0; col < in.cols; ++col) {
            QVector im(in.rows, Rational(0));
            for (int rr = 0; rr < in.rows; ++rr) im[rr] = in.a[rr][col];
            image.insert(std::move(im));
        }
        std::vector<QVector> reps = pick_representatives(kk.kernel_basis, image);
        entry.betti = (int)kk.kernel_basis.size() - image.dim();
        if (entry.betti != (int)reps.size())
            throw InternalError("betti dimension disagrees with representative count");
        for (const QVector& r : reps) {
            MixedForm f = MixedForm::zero(m.rank, m.nvars, fiber);
            for (int k = 0; k < (int)r.size(); ++k) {
                if (r[k].is_zero()) continue;
                auto& [p, b] = blk.elems[k];
                Cochain comp = f.component(p);
                comp.add(b.I, b.a, Poly::monomial(m.nvars, b.e, r[k]));
                f.set_component(comp);
            }
            entry.reps.push_back(std::move(f));
        }
        return entry;
    };

    LineResult res;
    res.line = line_label;
    res.entries.push_back(block_entry(be, d_even, d_odd));
    res.entries.push_back(block_entry(bo, d_odd, d_even));
    res.euler_sides = {res.entries[0].dim_space - res.entries[1].dim_space,
                       res.entries[0].betti - res.entries[1].betti};
    return res;
}

std::vector<std::pair<int, int>> line_spaces(const AlgebroidModel& m, int line) {
    std::vector<std::pair<int, int>> out;
    int s = m.weight_shift;
    for (int p = 0; p <= m.rank; ++p) {
        int w = line + p * s;
        if (w < 0) continue;
        if (m.nvars == 0 && w != 0) continue;
        out.emplace_back(p, w);
    }
    return out;
}

std::vector<std::pair<int, int>> window_spaces(const AlgebroidModel& m, int window) {
    std::vector<std::pair<int, int>> out;
    int wmax = m.nvars == 0 ? 0 : window;
    for (int p = 0; p <= m.rank; ++p)
        for (int w = 0; w <= wmax; ++w) out.emplace_back(p, w);
    return out;
}

template <typename F>
std::vector<LineResult> run_lines(const std::vector<int>& lines, bool parallel, F&& body) {
    std::vector<LineResult> out(lines.size());
    std::vector<std::exception_ptr> errs(lines.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int k = 0; k < (int)lines.size(); ++k) {
        try {
            out[k] = body(lines[k]);
        } catch (...) {
            errs[k] = std::current_exception();
        }
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace

ComplexSpec make_complex_spec(const AlgebroidModel& model, const Connection& conn,
                              const MixedForm& theta, int window, bool parallel) {
    if (conn.model != &model) throw ValidationError("connection belongs to a different model");
    FlatnessResult fl = is_flat(conn);
    if (!fl.flat)
        throw ValidationError("connection is not flat; curvature witness (u" +
                              std::to_string(fl.witness.first) + ",u" +
                              std::to_string(fl.witness.second) + ")");
    if (!theta.is_zero()) {
        if (theta.fiber != 1 || !theta.is_odd())
            throw ValidationError("twist theta must be a scalar odd form");
        MixedForm dtheta = algebroid_d(model, theta);
        if (!dtheta.is_zero())
            throw ValidationError("twist theta is not closed: d theta = " + dtheta.str());
    }
    // connection data must respect the weight grading for exact line slicing
    int s = model.weight_shift;
    for (auto& mat : conn.gamma)
        for (auto& row : mat)
            for (auto& p : row) {
                if (p.is_zero()) continue;
                auto d = p.homogeneous_degree();
                if (!d || *d != s)
                    throw ValidationError(
                        "Christoffel entry is not weight-homogeneous of the model shift: " +
                        p.str());
            }
    ComplexSpec spec;
    spec.model = &model;
    spec.conn = &conn;
    spec.theta = theta;
    spec.window = window;
    spec.parallel = parallel;
    return spec;
}

std::vector<LineComplex> weight_lines(const ComplexSpec& spec) {
    std::vector<LineComplex> out;
    for (int line : line_indices(*spec.model, spec.window)) {
        LineComplex lc = build_line(spec, line);
        bool empty = std::all_of(lc.bases.begin(), lc.bases.end(),
                                 [](const auto& b) { return b.empty(); });
        if (!empty) out.push_back(std::move(lc));
    }
    return out;
}

BettiReport betti(const ComplexSpec& spec) {
    const AlgebroidModel& m = *spec.model;
    BettiReport rep;
    rep.window = spec.window;
    rep.parity_mode = !spec.theta.is_zero() || spec.force_parity;
    rep.truncated = rep.parity_mode && !line_mode_possible(spec);

    if (!rep.parity_mode) {
        std::vector<int> lines = line_indices(m, spec.window);
        rep.lines = run_lines(lines, spec.parallel, [&](int line) {
            return graded_line_result(spec, build_line(spec, line));
        });
        // drop lines with no spaces at all
        std::erase_if(rep.lines, [](const LineResult& lr) {
            return std::all_of(lr.entries.begin(), lr.entries.end(),
                               [](const BettiEntry& e) { return e.dim_space == 0; });
        });
        rep.total_dims.assign(m.rank + 1, 0);
        rep.total_betti.assign(m.rank + 1, 0);
        for (auto& lr : rep.lines)
            for (int p = 0; p <= m.rank; ++p) {
                rep.total_dims[p] += lr.entries[p].dim_space;
                rep.total_betti[p] += lr.entries[p].betti;
            }
        return rep;
    }

    if (!rep.truncated) {
        std::vector<int> lines = line_indices(m, spec.window);
        rep.lines = run_lines(lines, spec.parallel, [&](int line) {
            return parity_result(spec, line, line_spaces(m, line), false);
        });
        std::erase_if(rep.lines, [](const LineResult& lr) {
            return lr.entries[0].dim_space == 0 && lr.entries[1].dim_space == 0;
        });
    } else {
        LineResult full = parity_result(spec, 0, window_spaces(m, spec.window), true);
        // stability surrogate: recompute on the shrunken window
        if (spec.window >= 2) {
            LineResult small = parity_result(spec, 0, window_spaces(m, spec.window - 2), true);
            bool same = full.entries[0].betti == small.entries[0].betti &&
                        full.entries[1].betti == small.entries[1].betti;
            full.entries[0].stable = same;
            full.entries[1].stable = same;
        } else {
            full.entries[0].stable = false;
            full.entries[1].stable = false;
        }
        rep.lines.push_back(std::move(full));
    }
    rep.total_dims.assign(2, 0);
    rep.total_betti.assign(2, 0);
    for (auto& lr : rep.lines)
        for (int b = 0; b < 2; ++b) {
            rep.total_dims[b] += lr.entries[b].dim_space;
            rep.total_betti[b] += lr.entries[b].betti;
            rep.all_stable = rep.all_stable && lr.entries[b].stable;
        }
    return rep;
}

namespace {

std::map<int, Cochain> split_by_weight(const Cochain& w) {
    std::map<int, Cochain> out;
    for (auto& [I, vals] : w.values)
        for (int a = 0; a < w.fiber; ++a)
            for (auto& [e, c] : vals[a].terms()) {
                int deg = 0;
                for (int x : e) deg += x;
                auto it = out.find(deg);
                if (it == out.end())
                    it = out.emplace(deg, Cochain::zero(w.rank, w.nvars, w.degree, w.fiber)).first;
                it->second.add(I, a, Poly::monomial(w.nvars, e, c));
            }
    return out;
}

}  // namespace

Cochain reduce_scalar_class(const ComplexSpec& spec, const Cochain& cocycle) {
    const AlgebroidModel& m = *spec.model;
    if (cocycle.fiber != 1)
        throw std::invalid_argument("reduce_scalar_class: scalar cochains only");
    if (!algebroid_d(m, cocycle).is_zero())
        throw ValidationError("reduce_scalar_class: input is not closed");
    int p = cocycle.degree;
    int s = m.weight_shift;
    Cochain out = Cochain::zero(m.rank, m.nvars, p, 1);
    for (auto& [w, part] : split_by_weight(cocycle)) {
        auto basis = space_basis(m, 1, p, w);
        SpaceIndex si;
        si.append(basis);
        RowSpace image((int)basis.size());
        for (const BasisElem& b : space_basis(m, 1, p - 1, w - s)) {
            Cochain db = algebroid_d(m, single_cochain(m, 1, p - 1, b));
            QVector v(si.dim, Rational(0));
            accumulate_coords(si, db, v, true);
            image.insert(std::move(v));
        }
        QVector v(si.dim, Rational(0));
        accumulate_coords(si, part, v, true);
        v = image.reduce(std::move(v));
        for (int k = 0; k < si.dim; ++k)
            if (!v[k].is_zero()) out.add(basis[k].I, 0, Poly::monomial(m.nvars, basis[k].e, v[k]));
    }
    return out;
}

Cochain cup_product(const ComplexSpec& spec, const Cochain& a, const Cochain& b) {
    const AlgebroidModel& m = *spec.model;
    if (a.rank != m.rank || b.rank != m.rank || a.nvars != m.nvars || b.nvars != m.nvars)
        throw std::invalid_argument("cup_product: classes from a different model");
    if (!algebroid_d(m, a).is_zero() || !algebroid_d(m, b).is_zero())
        throw ValidationError("cup_product: inputs must be closed");
    return reduce_scalar_class(spec, wedge(a, b));
}

MixedForm reduce_twisted_class(const ComplexSpec& spec, const MixedForm& omega) {
    const AlgebroidModel& m = *spec.model;
    int fiber = spec.conn->fiber;
    auto spaces = window_spaces(m, spec.window);
    std::vector<std::pair<int, int>> even, odd;
    for (auto& pw : spaces) (pw.first % 2 == 0 ? even : odd).push_back(pw);

    auto reduce_block = [&](const std::vector<std::pair<int, int>>& target,
                            const std::vector<std::pair<int, int>>& source,
                            const MixedForm& part) {
        std::vector<std::pair<int, BasisElem>> elems;
        for (auto& [p, w] : target)
            for (auto& b : space_basis(m, fiber, p, w)) elems.emplace_back(p, b);
        std::map<std::pair<int, Key>, int> idx;
        for (int k = 0; k < (int)elems.size(); ++k)
            idx.emplace(std::make_pair(elems[k].first,
                                       Key{elems[k].second.I, elems[k].second.a, elems[k].second.e}),
                        k);
        auto to_vec = [&](const MixedForm& f) {
            QVector v(elems.size(), Rational(0));
            for (auto& [d, comp] : f.comp)
                for (auto& [I, vals] : comp.values)
                    for (int a = 0; a < fiber; ++a)
                        for (auto& [e, c] : vals[a].terms()) {
                            auto it = idx.find(std::make_pair(d, Key{I, a, e}));
                            if (it != idx.end()) v[it->second] += c;
                        }
            return v;
        };
        RowSpace image((int)elems.size());
        for (auto& [p, w] : source)
            for (auto& b : space_basis(m, fiber, p, w)) {
                MixedForm f = MixedForm::from_cochain(single_cochain(m, fiber, p, b));
                image.insert(to_vec(apply_operator(spec, f)));
            }
        QVector v = image.reduce(to_vec(part));
        MixedForm out = MixedForm::zero(m.rank, m.nvars, fiber);
        for (int k = 0; k < (int)v.size(); ++k) {
            if (v[k].is_zero()) continue;
            auto& [p, b] = elems[k];
            Cochain comp = out.component(p);
            comp.add(b.I, b.a, Poly::monomial(m.nvars, b.e, v[k]));
            out.set_component(comp);
        }
        return out;
    };

    MixedForm even_part = MixedForm::zero(m.rank, m.nvars, fiber);
    MixedForm odd_part = MixedForm::zero(m.rank, m.nvars, fiber);
    for (auto& [d, comp] : omega.comp)
        (d % 2 == 0 ? even_part : odd_part).set_component(comp);

    MixedForm out = MixedForm::zero(m.rank, m.nvars, fiber);
    if (!even_part.is_zero()) out += reduce_block(even, odd, even_part);
    if (!odd_part.is_zero()) out += reduce_block(odd, even, odd_part);
    return out;
}

MixedForm module_action(const ComplexSpec& spec, const Cochain& a, const MixedForm& omega) {
    const AlgebroidModel& m = *spec.model;
    if (!algebroid_d(m, a).is_zero())
        throw ValidationError("module_action: scalar class must be closed");
    MixedForm wa = MixedForm::from_cochain(a);
    return reduce_twisted_class(spec, wedge(wa, omega));
}

namespace {

// Projects a mixed form onto coefficient weight <= cap.
MixedForm project_window(const MixedForm& f, int cap) {
    MixedForm out = MixedForm::zero(f.rank, f.nvars, f.fiber);
    for (auto& [d, comp] : f.comp) {
        Cochain c = Cochain::zero(f.rank, f.nvars, d, f.fiber);
        for (auto& [I, vals] : comp.values)
            for (int a = 0; a < f.fiber; ++a)
                for (auto& [e, co] : vals[a].terms()) {
                    int deg = 0;
                    for (int x : e) deg += x;
                    if (deg <= cap) c.add(I, a, Poly::monomial(f.nvars, e, co));
                }
        out.set_component(c);
    }
    return out;
}

}  // namespace

TwistInvarianceReport verify_twist_invariance(const ComplexSpec& spec, const MixedForm& psi) {
    const AlgebroidModel& m = *spec.model;
    TwistInvarianceReport rep;

    if (psi.fiber != 1 || !psi.is_even() || !psi.component(0).is_zero())
        throw ValidationError("verify_twist_invariance: psi must be even with zero degree-0 part");

    MixedForm dpsi = algebroid_d(m, psi);
    MixedForm theta2 = spec.theta + dpsi;
    ComplexSpec spec2 = make_complex_spec(m, *spec.conn, theta2, spec.window, spec.parallel);

    rep.report_theta = betti(spec);
    rep.report_shifted = betti(spec2);

    rep.betti_equal = rep.report_theta.total_betti == rep.report_shifted.total_betti;
    if (!rep.betti_equal)
        rep.witnesses.push_back("twisted Betti tables differ between theta and theta + dPsi");

    MixedForm minus_psi = -psi;
    int cap = m.nvars == 0 ? 0 : spec.window;

    // per-parity class matrices
    for (int par = 0; par < 2; ++par) {
        std::vector<MixedForm> mapped;
        for (auto& lr : rep.report_theta.lines)
            for (auto& entry : lr.entries) {
                // graded mode: entries indexed by degree; parity mode: {even, odd}
                size_t idx = &entry - lr.entries.data();
                int entry_par =
                    rep.report_theta.parity_mode ? (int)idx : (int)(idx % 2);
                if (entry_par != par) continue;
                for (auto& r : entry.reps) mapped.push_back(exp_wedge(minus_psi, r));
            }
        int expected = 0;
        // count shifted classes of this parity
        for (auto& lr : rep.report_shifted.lines)
            for (size_t idx = 0; idx < lr.entries.size(); ++idx) {
                int entry_par =
                    rep.report_shifted.parity_mode ? (int)idx : (int)(idx % 2);
                if (entry_par == par) expected += lr.entries[idx].betti;
            }
        int span_dim = 0;
        std::optional<RowSpace> spanspace;
        for (auto& f : mapped) {
            MixedForm pf = project_window(f, cap);
            MixedForm dpf = project_window(twisted_d_unchecked(*spec.conn, theta2, pf), cap);
            if (!dpf.is_zero()) {
                rep.mapped_closed = false;
                rep.witnesses.push_back("mapped representative is not (theta+dPsi)-closed: " +
                                        f.str());
                continue;
            }
            MixedForm red = reduce_twisted_class(spec2, pf);
            // coordinates: flatten deterministically via string-free basis walk
            auto spaces = window_spaces(m, spec.window);
            std::vector<std::pair<int, BasisElem>> elems;
            for (auto& [p, w] : spaces) {
                if (p % 2 != par) continue;
                for (auto& b : space_basis(m, spec.conn->fiber, p, w)) elems.emplace_back(p, b);
            }
            QVector v(elems.size(), Rational(0));
            std::map<std::pair<int, Key>, int> idx;
            for (int k = 0; k < (int)elems.size(); ++k)
                idx.emplace(std::make_pair(elems[k].first, Key{elems[k].second.I,
                                                               elems[k].second.a,
                                                               elems[k].second.e}),
                            k);
            for (auto& [d, comp] : red.comp)
                for (auto& [I, vals] : comp.values)
                    for (int a = 0; a < spec.conn->fiber; ++a)
                        for (auto& [e, c] : vals[a].terms()) {
                            auto it = idx.find(std::make_pair(d, Key{I, a, e}));
                            if (it != idx.end()) v[it->second] += c;
                        }
            if (!spanspace) spanspace.emplace((int)elems.size());
            if (spanspace->insert(std::move(v))) ++span_dim;
        }
        if (span_dim != expected) {
            rep.class_map_bijective = false;
            rep.witnesses.push_back("class map not bijective in parity " + std::to_string(par) +
                                    ": mapped span " + std::to_string(span_dim) + " of " +
                                    std::to_string(expected));
        }
    }

    // module equivariance spot check: eps([a].[w]) = [a].eps([w])
    {
        Connection triv = trivial_connection(m);
        ComplexSpec scal =
            make_complex_spec(m, triv, MixedForm::zero(m.rank, m.nvars, 1), spec.window, false);
        BettiReport hrep = betti(scal);
        std::vector<Cochain> scal_classes;
        for (auto& lr : hrep.lines)
            for (auto& e : lr.entries)
                for (auto& r : e.reps) {
                    if ((int)scal_classes.size() >= 3) break;
                    scal_classes.push_back(r.comp.empty() ? Cochain::zero(m.rank, m.nvars, 0, 1)
                                                          : r.comp.begin()->second);
                }
        std::vector<MixedForm> tw_classes;
        for (auto& lr : rep.report_theta.lines)
            for (auto& e : lr.entries)
                for (auto& r : e.reps)
                    if ((int)tw_classes.size() < 3) tw_classes.push_back(r);
        for (auto& alpha : scal_classes)
            for (auto& w : tw_classes) {
                MixedForm wa = MixedForm::from_cochain(alpha);
                MixedForm left = project_window(exp_wedge(minus_psi, wedge(wa, w)), cap);
                MixedForm right = project_window(wedge(wa, exp_wedge(minus_psi, w)), cap);
                MixedForm dl = reduce_twisted_class(spec2, left);
                MixedForm dr = reduce_twisted_class(spec2, right);
                if (dl != dr) {
                    rep.module_equivariant = false;
                    rep.witnesses.push_back("module equivariance fails for [" + alpha.str() +
                                            "] acting on " + w.str());
                }
            }
    }

    rep.ok = rep.betti_equal && rep.mapped_closed && rep.class_map_bijective &&
             rep.module_equivariant;
    return rep;
}

}  // namespace twistcoh

// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0
//
// twistcoh: exact cohomology of finite Lie algebroid models.
//
// Commands
//   check FILE        axioms + flatness + twist closedness
//   cohomology FILE   untwisted Betti table per weight line
//   twisted FILE      Z/2-graded twisted Betti table
//   verify-twist FILE twist-invariance pipeline (needs theta and psi)
//   cup-table FILE    cup products of the scalar cohomology generators

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistcoh/parse.hpp"
#include "twistcoh/report.hpp"

namespace {

using namespace twistcoh;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CommonOpts {
    std::string file;
    std::string theta_file;
    std::string psi_file;
    int max_weight = 6;
    std::string format = "text";
    std::string parallel = "on";
    unsigned seed = 0;
    bool window_check = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("file", o.file, "model file")->required();
    cmd->add_option("--theta", o.theta_file, "twist form file (overrides [theta])");
    cmd->add_option("--psi", o.psi_file, "gauge form file (overrides [psi])");
    cmd->add_option("--max-weight", o.max_weight, "weight window W")->default_val(6);
    cmd->add_option("--format", o.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    cmd->add_option("--parallel", o.parallel, "on|off")
        ->check(CLI::IsMember({"on", "off"}))
        ->default_val("on");
    cmd->add_option("--seed", o.seed, "seed for randomized subcommands")->default_val(0);
    cmd->add_flag("--window-check", o.window_check, "recompute at W-2 for stability");
}

struct LoadedInput {
    ParsedInput parsed;
    Connection trivial;  // used when the file declares no connection
    MixedForm theta;
    MixedForm psi;
    bool has_psi = false;
};

LoadedInput load(const CommonOpts& o) {
    LoadedInput li;
    li.parsed = parse_input(slurp(o.file));
    const AlgebroidModel& m = *li.parsed.model;
    li.trivial = trivial_connection(m);
    li.theta = MixedForm::zero(m.rank, m.nvars, 1);
    li.psi = MixedForm::zero(m.rank, m.nvars, 1);
    if (li.parsed.theta) li.theta = *li.parsed.theta;
    if (!o.theta_file.empty()) li.theta = parse_form_text(slurp(o.theta_file), m, "theta");
    if (li.parsed.psi) {
        li.psi = *li.parsed.psi;
        li.has_psi = true;
    }
    if (!o.psi_file.empty()) {
        li.psi = parse_form_text(slurp(o.psi_file), m, "psi");
        li.has_psi = true;
    }
    return li;
}

const Connection& connection_of(const LoadedInput& li) {
    return li.parsed.conn ? *li.parsed.conn : li.trivial;
}

Json header_for(const std::string& command, const LoadedInput& li) {
    std::string canon = print_input(li.parsed);
    return report_header(command, li.parsed.model->name, fnv1a_digest(canon));
}

// Per-line agreement between a W table and its W-2 recomputation.
Json window_check_json(const BettiReport& big, const BettiReport& small) {
    Json j;
    bool consistent = true;
    for (const LineResult& ls : small.lines) {
        const LineResult* lb = nullptr;
        for (const LineResult& cand : big.lines)
            if (cand.line == ls.line) lb = &cand;
        if (!lb || lb->entries.size() != ls.entries.size()) {
            consistent = false;
            continue;
        }
        for (size_t k = 0; k < ls.entries.size(); ++k)
            if (lb->entries[k].betti != ls.entries[k].betti) consistent = false;
    }
    j["window_minus_two_consistent"] = consistent;
    return j;
}

int run_check(const CommonOpts& o) {
    LoadedInput li = load(o);
    const AlgebroidModel& m = *li.parsed.model;
    Json doc = header_for("check", li);
    AxiomReport ax = check_axioms(m);
    doc["axioms"] = axiom_json(ax);
    bool ok = ax.ok;

    const Connection& conn = connection_of(li);
    FlatnessResult fl = is_flat(conn);
    Json jc;
    jc["fiber"] = conn.fiber;
    jc["flat"] = fl.flat;
    if (!fl.flat) {
        jc["curvature_witness"] =
            "(u" + std::to_string(fl.witness.first) + ",u" + std::to_string(fl.witness.second) + ")";
        ok = false;
    }
    doc["connection"] = std::move(jc);

    if (!li.theta.is_zero()) {
        Json jt;
        jt["theta"] = form_str(li.theta);
        jt["odd"] = li.theta.is_odd();
        MixedForm dtheta = algebroid_d(m, li.theta);
        jt["closed"] = dtheta.is_zero();
        if (!dtheta.is_zero()) jt["d_theta"] = form_str(dtheta);
        if (!li.theta.is_odd() || !dtheta.is_zero()) ok = false;
        doc["twist"] = std::move(jt);
    }
    doc["ok"] = ok;
    std::cout << render(doc, o.format);
    return ok ? 0 : 1;
}

int run_betti(const CommonOpts& o, bool twisted_cmd) {
    LoadedInput li = load(o);
    const AlgebroidModel& m = *li.parsed.model;
    const Connection& conn = connection_of(li);
    MixedForm theta = twisted_cmd ? li.theta : MixedForm::zero(m.rank, m.nvars, 1);
    ComplexSpec spec = make_complex_spec(m, conn, theta, o.max_weight, o.parallel == "on");
    spec.force_parity = twisted_cmd;
    BettiReport rep = betti(spec);
    Json doc = header_for(twisted_cmd ? "twisted" : "cohomology", li);
    if (twisted_cmd) doc["theta"] = form_str(theta);
    doc["betti"] = betti_json(rep);
    if (o.window_check) {
        ComplexSpec small = spec;
        small.window = std::max(0, o.max_weight - 2);
        doc["window_check"] = window_check_json(rep, betti(small));
    }
    std::cout << render(doc, o.format);
    return 0;
}

int run_verify(const CommonOpts& o) {
    LoadedInput li = load(o);
    const AlgebroidModel& m = *li.parsed.model;
    if (!li.has_psi) throw ValidationError("verify-twist requires psi ([psi] section or --psi)");
    const Connection& conn = connection_of(li);
    ComplexSpec spec = make_complex_spec(m, conn, li.theta, o.max_weight, o.parallel == "on");
    TwistInvarianceReport rep = verify_twist_invariance(spec, li.psi);
    Json doc = header_for("verify-twist", li);
    doc["theta"] = form_str(li.theta);
    doc["psi"] = form_str(li.psi);
    doc["result"] = twist_invariance_json(rep);
    std::cout << render(doc, o.format);
    return rep.ok ? 0 : 1;
}

int run_cup_table(const CommonOpts& o) {
    LoadedInput li = load(o);
    const AlgebroidModel& m = *li.parsed.model;
    Connection triv = trivial_connection(m);
    ComplexSpec spec = make_complex_spec(m, triv, MixedForm::zero(m.rank, m.nvars, 1),
                                         o.max_weight, o.parallel == "on");
    BettiReport rep = betti(spec);
    struct Gen {
        std::string label;
        Cochain rep;
    };
    std::vector<Gen> gens;
    for (const LineResult& lr : rep.lines)
        for (size_t p = 0; p < lr.entries.size(); ++p)
            for (const MixedForm& r : lr.entries[p].reps) {
                Cochain c = r.comp.empty() ? Cochain::zero(m.rank, m.nvars, (int)p, 1)
                                           : r.comp.begin()->second;
                gens.push_back({"g" + std::to_string(gens.size() + 1) + " (deg " +
                                    std::to_string(p) + ", line " + std::to_string(lr.line) + ")",
                                c});
            }
    Json doc = header_for("cup-table", li);
    doc["betti"] = betti_json(rep);
    Json jg = Json::array();
    for (const Gen& g : gens) jg.push_back(g.label + ": " + g.rep.str());
    doc["generators"] = std::move(jg);
    Json table = Json::array();
    for (const Gen& a : gens)
        for (const Gen& b : gens) {
            if (a.rep.degree + b.rep.degree > m.rank) continue;
            Cochain prod = cup_product(spec, a.rep, b.rep);
            Json row;
            row["left"] = a.label;
            row["right"] = b.label;
            row["product"] = prod.str();
            table.push_back(std::move(row));
        }
    doc["cup_table"] = std::move(table);
    std::cout << render(doc, o.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (twisted) Lie algebroid cohomology"};
    app.require_subcommand(1);

    CommonOpts check_o, coh_o, tw_o, vt_o, cup_o;
    CLI::App* c_check = app.add_subcommand("check", "validate axioms, flatness, twist closedness");
    add_common(c_check, check_o);
    CLI::App* c_coh = app.add_subcommand("cohomology", "untwisted Betti table");
    add_common(c_coh, coh_o);
    CLI::App* c_tw = app.add_subcommand("twisted", "twisted Z/2-graded Betti table");
    add_common(c_tw, tw_o);
    CLI::App* c_vt = app.add_subcommand("verify-twist", "twist-invariance pipeline");
    add_common(c_vt, vt_o);
    CLI::App* c_cup = app.add_subcommand("cup-table", "cup products of scalar generators");
    add_common(c_cup, cup_o);

    CLI11_PARSE(app, argc, argv);

    auto t0 = std::chrono::steady_clock::now();
    int rc = 4;
    std::string cmd;
    try {
        if (c_check->parsed()) {
            cmd = "check";
            rc = run_check(check_o);
        } else if (c_coh->parsed()) {
            cmd = "cohomology";
            rc = run_betti(coh_o, false);
        } else if (c_tw->parsed()) {
            cmd = "twisted";
            rc = run_betti(tw_o, true);
        } else if (c_vt->parsed()) {
            cmd = "verify-twist";
            rc = run_verify(vt_o);
        } else if (c_cup->parsed()) {
            cmd = "cup-table";
            rc = run_cup_table(cup_o);
        }
    } catch (const twistcoh::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        rc = 2;
    } catch (const twistcoh::WindowOverflowError& e) {
        std::cerr << "window overflow: " << e.what() << "\n";
        rc = 3;
    } catch (const twistcoh::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        rc = 1;
    } catch (const twistcoh::InternalError& e) {
        std::cerr << "internal error (this is a bug): " << e.what() << "\n";
        rc = 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 4;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "timing: " << cmd << " "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return rc;
}

// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/report.hpp"

#include <cstdint>
#include <sstream>

namespace twistcoh {

std::string fnv1a_digest(const std::string& canonical_text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical_text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    for (int k = 15; k >= 0; --k) os << "0123456789abcdef"[(h >> (4 * k)) & 0xf];
    return os.str();
}

Json report_header(const std::string& command, const std::string& model_name,
                   const std::string& digest) {
    Json j;
    j["tool"] = "twistcoh";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["model"] = model_name.empty() ? "(unnamed)" : model_name;
    j["model_digest"] = digest;
    return j;
}

Json axiom_json(const AxiomReport& rep) {
    Json j;
    j["ok"] = rep.ok;
    j["validation_window"] = rep.validation_window;
    j["violations"] = rep.violations;
    return j;
}

Json betti_json(const BettiReport& rep) {
    Json j;
    j["grading"] = rep.parity_mode ? "parity" : "integer";
    j["window"] = rep.window;
    j["truncated"] = rep.truncated;
    j["all_stable"] = rep.all_stable;

    auto label = [&](size_t idx) {
        if (!rep.parity_mode) return std::string("H") + std::to_string(idx);
        return std::string(idx == 0 ? "H_even" : "H_odd");
    };

    Json lines = Json::array();
    for (const LineResult& lr : rep.lines) {
        Json jl;
        jl["line"] = lr.line;
        if (!lr.weights.empty()) jl["weights"] = lr.weights;
        Json entries = Json::array();
        for (size_t p = 0; p < lr.entries.size(); ++p) {
            const BettiEntry& e = lr.entries[p];
            Json je;
            je["space"] = label(p);
            je["dim"] = e.dim_space;
            je["betti"] = e.betti;
            je["stable"] = e.stable;
            Json reps = Json::array();
            for (const MixedForm& r : e.reps) reps.push_back(r.str());
            je["representatives"] = reps;
            entries.push_back(std::move(je));
        }
        jl["entries"] = std::move(entries);
        jl["euler_dim"] = lr.euler_sides.size() > 0 ? lr.euler_sides[0] : 0;
        jl["euler_betti"] = lr.euler_sides.size() > 1 ? lr.euler_sides[1] : 0;
        lines.push_back(std::move(jl));
    }
    j["lines"] = std::move(lines);

    Json totals;
    for (size_t p = 0; p < rep.total_betti.size(); ++p) {
        Json jt;
        jt["dim"] = rep.total_dims[p];
        jt["betti"] = rep.total_betti[p];
        totals[label(p)] = std::move(jt);
    }
    j["totals"] = std::move(totals);
    return j;
}

Json twist_invariance_json(const TwistInvarianceReport& rep) {
    Json j;
    j["isomorphic"] = rep.ok;
    j["betti_equal"] = rep.betti_equal;
    j["mapped_closed"] = rep.mapped_closed;
    j["class_map_bijective"] = rep.class_map_bijective;
    j["module_equivariant"] = rep.module_equivariant;
    j["witnesses"] = rep.witnesses;
    j["theta"] = betti_json(rep.report_theta);
    j["theta_shifted"] = betti_json(rep.report_shifted);
    return j;
}

namespace {

void render_text(const Json& j, std::ostream& os, int indent) {
    std::string pad(indent * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_object() || it->is_array()) {
                os << pad << it.key() << ":\n";
                render_text(*it, os, indent + 1);
            } else {
                os << pad << it.key() << ": " << (it->is_string() ? it->get<std::string>()
                                                                  : it->dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        if (j.empty()) {
            os << pad << "(none)\n";
            return;
        }
        for (const Json& item : j) {
            if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                render_text(item, os, indent + 1);
            } else {
                os << pad << "- "
                   << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render(const Json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    std::ostringstream os;
    render_text(doc, os, 0);
    return os.str();
}

std::string betti_text(const BettiReport& rep) { return render(betti_json(rep), "text"); }

std::string twist_invariance_text(const TwistInvarianceReport& rep) {
    return render(twist_invariance_json(rep), "text");
}

}  // namespace twistcoh

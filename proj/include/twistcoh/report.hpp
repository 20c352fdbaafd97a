// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "twistcoh/cohomology.hpp"
#include "twistcoh/model.hpp"

namespace twistcoh {

/// Reports keep key insertion order so text and JSON are byte-stable.
using Json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64-bit digest of the canonical model text, as 16 hex digits.
std::string fnv1a_digest(const std::string& canonical_text);

/// Common header: version, command, model name + digest.
Json report_header(const std::string& command, const std::string& model_name,
                   const std::string& digest);

Json axiom_json(const AxiomReport& rep);
Json betti_json(const BettiReport& rep);
Json twist_invariance_json(const TwistInvarianceReport& rep);

/// Text renderers for the same payloads; all numbers are exact strings.
std::string betti_text(const BettiReport& rep);
std::string twist_invariance_text(const TwistInvarianceReport& rep);

/// Renders a full report document: JSON dump or an indented text layout.
std::string render(const Json& doc, const std::string& format);

}  // namespace twistcoh

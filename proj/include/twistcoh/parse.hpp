// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "twistcoh/cohomology.hpp"

namespace twistcoh {

/// Result of parsing a declarative model file: the validated model plus the
/// optional connection / twist data found in the same file. The connection
/// points into *model, so the struct is move-only.
struct ParsedInput {
    std::unique_ptr<AlgebroidModel> model;
    std::optional<Connection> conn;
    std::optional<MixedForm> theta;
    std::optional<MixedForm> psi;
};

/// Parses a model file ([model], [bracket], [anchor], [connection], [theta],
/// [psi] sections). Throws ParseError with line/column on malformed input and
/// ValidationError when the parsed data fails the exact structural checks.
ParsedInput parse_input(const std::string& text);

/// Parses a standalone form file: a [theta] or [psi] section (selected by
/// key) whose expression is read against an existing model.
MixedForm parse_form_text(const std::string& text, const AlgebroidModel& m,
                          const std::string& key);

/// Canonical text form; parse_input(print_input(x)) equals x field by field.
std::string print_input(const ParsedInput& in);

/// Canonical text of a scalar mixed form in the model file syntax.
std::string form_str(const MixedForm& f);

bool models_equal(const AlgebroidModel& a, const AlgebroidModel& b);

}  // namespace twistcoh

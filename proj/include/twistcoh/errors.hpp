// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace twistcoh {

/// Model/connection/twist data failed an exact structural check. The message
/// names a witness (violating triple, nonzero curvature entry, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input file is syntactically malformed.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line),
          col(col) {}
    int line;
    int col;
};

/// A differential image escaped the finite weight window.
struct WindowOverflowError : std::runtime_error {
    explicit WindowOverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Broken internal invariant; always a bug.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace twistcoh

// Copyright 2026 The Volform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <string>

namespace volform {

/// Parse a matrix from CSV (one row per line, comma separated, no header)
/// or JSON {"rows": [[...], ...]}. The format is sniffed from the content:
/// a leading '{' means JSON. Ragged rows or empty input raise InputError.
Eigen::MatrixXd parse_matrix(const std::string& text);

/// parse_matrix over the contents of a file; unreadable file is an
/// InputError.
Eigen::MatrixXd load_matrix(const std::string& path);

}  // namespace volform

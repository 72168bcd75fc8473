// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_SERIALIZE_HPP
#define PRELOG_SERIALIZE_HPP

#include <string>

#include "prelog/channel.hpp"
#include "prelog/complex_matrix.hpp"
#include "prelog/prelog_formulas.hpp"
#include "prelog/property_a.hpp"

namespace prelog {

// Matrix JSON format, shared by every tool in the artifact:
//   {"rows": int, "cols": int, "entries": [[re, im], ...]}  (row-major)
// A correlation root adds the redundant "n" and "q" fields.

std::string matrix_to_json(const ComplexMatrix &mat);
ComplexMatrix matrix_from_json(const std::string &text); // throws IoError

std::string correlation_root_to_json(const CorrelationRoot &root);

/// Parses and validates; throws IoError on malformed input and
/// ValidationError when the matrix is not a correlation root.
CorrelationRoot correlation_root_from_json(const std::string &text, double rel_tol = 1e-10);

std::string property_a_report_to_json(const PropertyAReport &report);
std::string prelog_report_to_json(const PrelogReport &report);

/// One dataset record (JSON-lines friendly, no trailing newline).
std::string block_sample_to_json(const BlockSample &sample);

std::string read_text_file(const std::string &path);             // throws IoError
void write_text_file(const std::string &path, const std::string &content); // throws IoError

} // namespace prelog

#endif // PRELOG_SERIALIZE_HPP

#pragma once

#include <string>

#include "intdec/algebra.hpp"

namespace intdec {

/// Parse the algebra interchange schema:
///   {"rank": t, "unity": [..], "table": [[[c]]], "name": str,
///    "standard_assumptions": bool, "basis_names": [..]?}
/// Throws std::invalid_argument with a position-annotated message on
/// malformed input.
StructureAlgebra algebra_from_json(const std::string& text);

StructureAlgebra load_algebra_file(const std::string& path);

std::string algebra_to_json(const StructureAlgebra& a);

/// Validation without construction: parses the schema and reports
/// associativity/unity failures instead of throwing on them. Parse errors
/// still throw std::invalid_argument.
struct JsonValidation {
  std::string name;
  int64_t rank = 0;
  bool standard_assumptions = true;
  ValidationReport report;
};
JsonValidation validate_algebra_json(const std::string& text);

}  // namespace intdec

#pragma once

// The "patchwork-problem/1" JSON document: polytope, triangulation, optional
// heights, signs, ambient and optional origin. Integers outside the 53-bit
// range are written as decimal strings, non-integral heights as "p/q".

#include <stdexcept>
#include <string>
#include <string_view>

#include "patchwork/constructions.hpp"

namespace patchwork {

inline constexpr std::string_view kProblemSchema = "patchwork-problem/1";
inline constexpr std::string_view kComplexSchema = "patchwork-complex/1";

/// Malformed document, out-of-range index or invalid triangulation.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Compact JSON followed by a newline. Vertices are written in the
/// triangulation's canonical order, so reading gives back an equal problem.
std::string write_problem(const Construction& problem);

/// Parses and validates a problem. Signs and heights follow the listed vertex
/// order. Throws SchemaError.
Construction read_problem(std::string_view text);

/// Cells per dimension as (face, copy) pairs plus the boundary index lists.
std::string write_complex(const PatchworkComplex& complex);

}  // namespace patchwork

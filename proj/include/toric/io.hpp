#pragma once

// File formats: polytopes and piecewise elements as JSON, integer matrices
// as whitespace-separated text.

#include "toric/cohomology.hpp"
#include "toric/linalg.hpp"
#include "toric/polytope.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace toric {

/// {"name", "ambient_dim", "vertices": [[coord,...],...], "facets"?: [{"normal",
/// "offset"},...]}. Coordinates and offsets are integers or "p/q" strings.
/// Without facets the hull is computed; with them they are cross-checked.
LatticePolytope parse_polytope(std::string_view json_text);
LatticePolytope load_polytope(const std::filesystem::path &path);

/// {"theory": "H"|"K", "ring": "Q"|"Z", "variables": [...], "assignments":
/// {"0": "<poly>", ...}, "multipliers"?: {"v,w": m}}. Keys must cover
/// 0..m-1 exactly.
PiecewiseElement parse_element(std::string_view json_text);
PiecewiseElement load_element(const std::filesystem::path &path);

/// One row per nonempty line; '#' starts a comment.
IntMatrix parse_matrix(std::string_view text);
IntMatrix load_matrix(const std::filesystem::path &path);

std::string read_file(const std::filesystem::path &path);

} // namespace toric

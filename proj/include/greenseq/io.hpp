#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "greenseq/disk.hpp"
#include "greenseq/quiver.hpp"

namespace greenseq {

// {"n": N, "frozen": F, "arrows": [[s, t, m], ...]}; vertices above N - F
// are frozen. ParseError on malformed input.
IceQuiver parse_ice_quiver_json(std::string_view text);
Quiver parse_quiver_json(std::string_view text);

// Whitespace separated rows of a skew-symmetric integer matrix.
Quiver parse_quiver_matrix(std::string_view text);

// JSON if the text starts with '{', matrix text otherwise.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::filesystem::path& path);

std::string quiver_to_json(const Quiver& q);
// {"boundary_points": b, "arcs": [{"type": "chord", "ends": [i, j]} |
// {"type": "radius", "end": i, "tag": "plain" | "notched"}]}; arc k is vertex k+1.
TaggedTriangulation parse_triangulation_json(std::string_view text);
std::string triangulation_to_json(const TaggedTriangulation& t);

std::string read_text(const std::filesystem::path& path);

}  // namespace greenseq

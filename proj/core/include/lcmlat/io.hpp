#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "lcmlat/gcd_set.hpp"
#include "lcmlat/structure.hpp"

namespace lcmlat {

// Set files:       {"name": "S8", "elements": ["1", "2", ...]}
//   (elements may also be plain JSON integers; name is optional)
// Structure files: {"n": 9, "covers": [[0, 1], [0, 2], ...]}

GcdSet parse_set_json(const std::string& text);
std::string set_to_json(const GcdSet& s);

Structure parse_structure_json(const std::string& text);
/// Covers in the structure's own indices, sorted.
std::string structure_to_json(const Structure& s);

/// Either kind of file, told apart by its keys.
using InputDocument = std::variant<GcdSet, Structure>;
InputDocument parse_input_json(const std::string& text);

/// Whole file as text; throws ValidationError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

/// Hasse diagram, bottom to top, one rank per height. Set nodes are labeled
/// with their values, bare structures with indices.
std::string to_dot(const GcdSet& s);
std::string to_dot(const Structure& s, const std::string& name = "structure");

}  // namespace lcmlat

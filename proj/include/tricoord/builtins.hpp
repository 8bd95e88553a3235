#pragma once

#include <string>
#include <vector>

#include "tricoord/mapping_class.hpp"
#include "tricoord/triangulation.hpp"

namespace tricoord {

/// Bundled surfaces and generator tables. Every table entry is verified at
/// construction: the path closes up and fixes the edge vector of its own
/// twisting curve.
std::vector<std::string> builtin_surface_names();
Triangulation builtin_surface(const std::string& name);
GeneratorTable builtin_table(const std::string& name);

/// JSON file formats.
///
/// Surface: {"name": "...", "faces": [[1,2,3],[-1,-2,-3], ...]} with 1-based
/// signed side labels.
/// Generators: {"a": [{"flip": 1}, {"reorder": [0,2,1]}], ...} with 0-based
/// indices.
Triangulation parse_surface_json(const std::string& text);
std::string surface_to_json(const Triangulation& t, const std::string& name);
GeneratorTable parse_generators_json(const std::string& text, const Triangulation& base);
std::string generators_to_json(const GeneratorTable& table);

/// Name-or-path resolution for the CLI. A spec containing '/' or ending in
/// ".json" is read as a file; otherwise it must be a builtin name, with
/// files named <spec>.surface.json / <spec>.gens.json in $TRICOORD_DATA
/// taking precedence when that variable is set.
Triangulation resolve_surface(const std::string& spec);
GeneratorTable resolve_table(const std::string& spec, const Triangulation& base);

EdgeVector parse_vector(const std::string& text, int zeta);
std::string vector_to_string(const EdgeVector& v);

} // namespace tricoord

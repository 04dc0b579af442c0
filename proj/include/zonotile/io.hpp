#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "zonotile/error.hpp"
#include "zonotile/lattice.hpp"
#include "zonotile/polygon.hpp"
#include "zonotile/zonotope.hpp"

namespace zonotile {

// JSON documents tagged by "type": zonotope3, polygon2, lattice2, lattice3.
// Every rational is a string "p" or "p/q"; unknown fields are rejected.
using Document = std::variant<Zonotope3, Polygon2, Lattice2, Lattice3>;

std::string document_type(const Document& doc);

// Throws SyntaxError (not JSON), SchemaError (wrong shape or bad rational)
// and InvariantViolation (parallel generators, nonconvex polygon, singular basis, ...).
Document parse_document(const std::string& text);
Document read_document(const std::string& path);  // also IoError

// Typed variants; SchemaError when the tag does not match.
Zonotope3 parse_zonotope3(const std::string& text);
Polygon2 parse_polygon2(const std::string& text);
Lattice2 parse_lattice2(const std::string& text);
Lattice3 parse_lattice3(const std::string& text);

std::string serialize(const Document& doc);
void write_document(const Document& doc, const std::string& path);

// Wavefront OBJ with one group per facet, facets fan-triangulated.
// Coordinates are decimals with 12 significant digits. A flat polytope is
// written as a single polygon group. Throws IoError.
void write_obj(const Zonotope3& p, std::ostream& out);
void write_obj(const Polytope3& p, std::ostream& out);
void export_obj(const Zonotope3& p, const std::string& path);
void export_obj(const Polytope3& p, const std::string& path);

}  // namespace zonotile

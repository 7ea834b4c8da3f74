#pragma once

#include <string>

#include "kedge/drawing.hpp"
#include "kedge/shell.hpp"

namespace kedge {

// Canonical JSON for drawings: fixed key order, two-space indentation,
// trailing newline; integers only.  serialize(parse(s)) == s for files in
// canonical form.
std::string serialize_drawing(const DrawingSpec& spec);
DrawingSpec parse_drawing(const std::string& text);  // throws ParseError

// FNV-1a over the canonical serialization, rendered as "fnv1a:<16 hex>".
std::string drawing_hash(const DrawingSpec& spec);

std::string serialize_certificate(const Certificate& cert, const std::string& drawing_hash);
Certificate parse_certificate(const std::string& text, std::string* hash_out = nullptr);

// Parses, checks the embedded hash against the drawing, then re-verifies
// every clause.  A certificate bound to a different drawing is malformed.
bool verify_certificate_text(const PlanarizedDrawing& d, const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}

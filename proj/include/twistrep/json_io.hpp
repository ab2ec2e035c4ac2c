#pragma once

#include <json.hpp>
#include <string>

#include "twistrep/cocycle.hpp"
#include "twistrep/matrix.hpp"
#include "twistrep/normal_form.hpp"
#include "twistrep/surface.hpp"

namespace twistrep {

// insertion-ordered JSON keeps command output byte-stable
using Json = nlohmann::ordered_json;

/*
 * Matrix wire format:
 *   {"rows": n, "cols": m, "entries": [["1", "-1/2", "0+1/3*i", ...], ...]}
 * Entries are written reduced with positive denominators; parsing accepts
 * unreduced input and normalizes.
 */
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);  // throws std::invalid_argument

Json sig_to_json(const SurfaceSig& sig);
SurfaceSig sig_from_json(const Json& j);

// {"sig": {...}, "values": {"a1": ["...", ...], ...}}
Json cocycle_to_json(const CrossedHomData& c);
CrossedHomData cocycle_from_json(const Json& j);

// {"sig": {...}, "dim": n, "images": {"a1": {...matrix...}, ...}}
Json rep_to_json(const GeneratorRep& rep);
GeneratorRep rep_from_json(const Json& j);

Json witness_to_json(const SolveWitness& w);

std::string read_input(const std::string& path);   // "-" reads stdin
void write_output(const std::string& path, const std::string& text);

}  // namespace twistrep

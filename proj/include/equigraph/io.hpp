#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "equigraph/graph.hpp"
#include "equigraph/spectra.hpp"

namespace equigraph {

using Json = nlohmann::ordered_json;

/// Error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

/// Graph text format: "n loops" then one "u v" line per edge (0-indexed).
/// Blank lines and lines starting with '#' are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

Json eig_to_json(const Eig& x);
Eig eig_from_json(const Json& j);
Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);
Json certified_to_json(const Certified& c);

}  // namespace equigraph

// io.hpp - edge-list text and the JSON documents used by the command line.
//
// Edge list: a header line "n m" followed by m lines "u v" (0-based,
// whitespace separated). Blank lines are ignored.
#pragma once

#include "tdl/constructions.hpp"
#include "tdl/graph.hpp"
#include "tdl/verifier.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace tdl {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Graph parse_edge_list(std::string_view text);
/// Canonical form: header, then edges with u < v in lexicographic order.
std::string emit_edge_list(const Graph& g);

/// {"vertex_labels":[...]}
std::string labeling_to_json(const Labeling& labeling);
/// Throws ParseError (line 0 for structural problems).
Labeling labeling_from_json(std::string_view text);

/// {"ok":bool,"k":int|null,"violations":[{"kind","vertices","labels"}]}
std::string report_to_json(const ViolationReport& report, bool ok, std::optional<Label> k);

/// Labeling document plus claimed_k, provenance, tight and repaired.
std::string construction_to_json(const ConstructionResult& result);

}  // namespace tdl

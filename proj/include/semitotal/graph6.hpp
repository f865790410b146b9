#pragma once

#include <string>
#include <string_view>

#include "semitotal/graph.hpp"

namespace semitotal {

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and a single
/// trailing newline are accepted. Throws Graph6Error with the byte offset on
/// an empty string, a non-printable byte, a non-minimal or truncated length
/// header, a wrong body length, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes with the shortest length header; no trailing newline.
std::string emit_graph6(const Graph& g);

}  // namespace semitotal

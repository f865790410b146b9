#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semitotal/harness.hpp"

namespace semitotal {

/// Left and right factor lists of a scan.
struct FamilySpec {
    std::vector<FactorDescriptor> left;
    std::vector<FactorDescriptor> right;
};

/// One factor list: comma-separated items, each one of
///   name:n | name:lo-hi                 (path, cycle, complete, star; plural accepted)
///   random:lo-hi:p:seed                 (or random:n:p:seed)
///   g6:<graph6>                         (inline graph6)
///   file:<path>                         (one graph6 record per non-empty line)
/// Throws InputError on anything malformed or on an empty range.
std::vector<FactorDescriptor> parse_factor_list(std::string_view text);

/// "LEFT x RIGHT" with a whitespace-delimited "x"; without one, both sides
/// use the same list. An empty or blank string yields an empty spec.
FamilySpec parse_family_spec(std::string_view text);

/// JSON form: {"left": [...], "right": [...]} or {"factors": [...]}. Entries:
///   {"family": "path", "n": 4}            {"family": "cycle", "n": [3, 6]}
///   {"family": "random", "n": [5, 6], "p": 0.5, "seed": 7}   ("seeds": [..] also accepted)
///   {"graph6": "A_"}                      {"graph6_file": "graphs.g6"}
FamilySpec parse_family_spec_json(std::string_view json_text);

/// Reads a single descriptor such as "path:2" or "g6:A_"; must resolve to exactly one graph.
FactorDescriptor parse_single_factor(std::string_view text);

}  // namespace semitotal

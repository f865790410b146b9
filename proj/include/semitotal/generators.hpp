#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitotal/graph.hpp"

namespace semitotal {

enum class Family { Path, Cycle, Complete, Star, Random };

std::string_view family_name(Family f);
/// Accepts the singular or plural form ("path", "paths").
std::optional<Family> family_from_name(std::string_view name);

/// Canonical labeling: path/cycle in order 0..n-1, star centre 0.
/// `star` of order n is K_{1,n-1}.
Graph generate(Family family, int n, double p = 0.0, std::uint64_t seed = 0);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
/// G(n,p) over pairs (i<j) in lexicographic order; one mt19937_64 draw per pair
/// mapped to [0,1) with 53 bits, edge iff draw < p.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Every connected graph on n vertices up to isomorphism (n <= 8), each in
/// a canonical labeling. Counts: 1, 1, 2, 6, 21, 112, 853, 11117.
std::vector<Graph> connected_graphs(int n);

}  // namespace semitotal

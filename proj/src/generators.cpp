#include "semitotal/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <random>
#include <set>

#include "semitotal/errors.hpp"

namespace semitotal {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Star: return "star";
        case Family::Random: return "random";
    }
    return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name.size() > 1 && name.back() == 's') name.remove_suffix(1);
    for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::Star, Family::Random})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

Graph path_graph(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3, got n=" + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph star_graph(int n) {
    if (n < 1) throw InputError("star needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(n, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InputError("random graph needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p) edges.emplace_back(i, j);
        }
    return Graph::from_edge_list(n, edges);
}

Graph generate(Family family, int n, double p, std::uint64_t seed) {
    switch (family) {
        case Family::Path: return path_graph(n);
        case Family::Cycle: return cycle_graph(n);
        case Family::Complete: return complete_graph(n);
        case Family::Star: return star_graph(n);
        case Family::Random: return random_graph(n, p, seed);
    }
    throw InputError("unknown family");
}

namespace {

constexpr int kCatalogMax = 8;
using Adjacency = std::array<std::uint8_t, kCatalogMax>;

// Upper-triangle bits in graph6 order (column by column), first bit most significant.
std::uint64_t encode(const Adjacency& adj, const std::vector<int>& perm, int n) {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | ((adj[perm[i]] >> perm[j]) & 1U);
    return code;
}

// Minimum code over labelings that list vertices by ascending refined degree class.
std::uint64_t canonical_code(const Adjacency& adj, int n) {
    std::vector<std::pair<std::vector<int>, int>> keyed;
    for (int v = 0; v < n; ++v) {
        std::vector<int> key{std::popcount(static_cast<unsigned>(adj[v]))};
        std::vector<int> nbr;
        for (int w = 0; w < n; ++w)
            if ((adj[v] >> w) & 1U) nbr.push_back(std::popcount(static_cast<unsigned>(adj[w])));
        std::sort(nbr.begin(), nbr.end());
        key.insert(key.end(), nbr.begin(), nbr.end());
        keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && keyed[static_cast<std::size_t>(j)].first == keyed[static_cast<std::size_t>(i)].first) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = keyed[static_cast<std::size_t>(i)].second;

    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> recurse = [&](std::size_t b) {
        if (b == blocks.size()) {
            best = std::min(best, encode(adj, perm, n));
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(perm.begin() + lo, perm.begin() + hi);
        do {
            recurse(b + 1);
        } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    };
    recurse(0);
    return best;
}

Adjacency decode(std::uint64_t code, int n) {
    Adjacency adj{};
    int bit = n * (n - 1) / 2 - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1U) {
                adj[i] |= static_cast<std::uint8_t>(1U << j);
                adj[j] |= static_cast<std::uint8_t>(1U << i);
            }
    return adj;
}

Graph to_graph(const Adjacency& adj, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((adj[i] >> j) & 1U) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > kCatalogMax)
        throw InputError("connected graph catalog supports 1 <= n <= " + std::to_string(kCatalogMax));
    // Every connected graph has a vertex whose deletion leaves it connected,
    // so extending connected graphs by one vertex reaches all of them.
    std::set<std::uint64_t> level{0};
    for (int order = 2; order <= n; ++order) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            Adjacency base = decode(code, order - 1);
            for (unsigned mask = 1; mask < (1U << (order - 1)); ++mask) {
                Adjacency adj = base;
                adj[order - 1] = static_cast<std::uint8_t>(mask);
                for (int i = 0; i < order - 1; ++i)
                    if ((mask >> i) & 1U) adj[i] |= static_cast<std::uint8_t>(1U << (order - 1));
                next.insert(canonical_code(adj, order));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (std::uint64_t code : level) out.push_back(to_graph(decode(code, n), n));
    return out;
}

}  // namespace semitotal

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "semitotal/graph.hpp"

namespace semitotal {

enum class Invariant { Gamma, GammaT, GammaT2, Rho };
enum class Method { Oracle, BranchAndBound };

std::string_view invariant_name(Invariant kind);  // "gamma", "gamma_t", "gamma_t2", "rho"
std::optional<Invariant> invariant_from_name(std::string_view name);
std::string_view method_name(Method method);

struct InvariantResult {
    Invariant kind;
    int value;
    VertexSet witness;
    Method method;
};

/// Largest graph the enumeration oracle accepts.
inline constexpr int kOracleMaxOrder = 20;

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);
/// Throws PreconditionError when g has an isolated vertex.
bool is_semitotal_dominating(const Graph& g, const VertexSet& s);
bool is_two_packing(const Graph& g, const VertexSet& s);

/// Predicate matching an invariant kind (semi-total checks isolate-freeness).
bool satisfies(const Graph& g, Invariant kind, const VertexSet& s);

/// Exhaustive search in increasing cardinality; the witness is the
/// lexicographically least set of optimal size. Throws OracleGuardError
/// above kOracleMaxOrder and PreconditionError on isolated vertices for
/// the three domination kinds.
InvariantResult solve_oracle(const Graph& g, Invariant kind);

/// Branch-and-bound. Domination kinds branch on the undominated vertex with
/// the fewest remaining candidates and prune with a coverage lower bound;
/// rho is a maximum independent set search on the distance-<=2 conflict graph.
InvariantResult solve_bnb(const Graph& g, Invariant kind);

InvariantResult solve(const Graph& g, Invariant kind, Method method);

/// Every minimum semi-total dominating set, lexicographically ordered.
std::vector<VertexSet> enumerate_min_semitotal_sets(const Graph& g);

}  // namespace semitotal

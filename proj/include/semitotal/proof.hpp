#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitotal/graph.hpp"

namespace semitotal {

/// A minimum semi-total dominating set U split into allied vertices X
/// (with a neighbour inside U) and free vertices Y = U \ X.
struct AlliedPartition {
    VertexSet u;
    VertexSet x;
    VertexSet y;
    /// u_1..u_k: allied ascending, then free ascending.
    std::vector<int> order;

    int allied_count() const { return x.size(); }  // x(G), also the index split point
    int free_count() const { return y.size(); }    // y(G)
    int k() const { return static_cast<int>(order.size()); }
    bool is_allied_index(int i) const { return i < allied_count(); }
};

/// Cells indexed parallel to AlliedPartition::order.
struct PiPartition {
    std::vector<VertexSet> cells;

    /// Index of the cell holding vertex w.
    int cell_of(int w) const;
};

/// Shadow of a product set D on H restricted to cell i.
struct ProjectionProfile {
    int index = 0;
    VertexSet d;  // in G□H: D ∩ (π_i × V(H))
    VertexSet p;  // projection of d onto H
    VertexSet m;  // V(H) − N_H[p]
    VertexSet q;  // members of p with another vertex of p ∪ m within distance 2
    VertexSet r;  // p − q
};

/// Pairs (i, v) whose cell π_i × {v} is horizontally dominated by D^v or has v ∈ R_i.
struct CoverIndex {
    int k = 0;
    int n_h = 0;
    std::vector<char> member;        // row-major k × n_h
    std::vector<int> row_counts;     // |L_i|
    std::vector<int> column_counts;  // |R^v|
    int total = 0;                   // N

    bool contains(int i, int v) const { return member[static_cast<std::size_t>(i * n_h + v)] != 0; }
    std::vector<std::pair<int, int>> entries() const;
};

/// Throws PreconditionError naming the failed predicate when u is not a
/// semi-total dominating set or not of minimum size.
AlliedPartition allied_split(const Graph& g, const VertexSet& u);

/// Over all minimum semi-total dominating sets, the split with the most
/// allied vertices; ties go to the lexicographically least set.
AlliedPartition max_allied_set(const Graph& g);

/// Least-index assignment. Free u_j own cell j; an allied u_i joins the cell
/// of its least-index neighbour in U; every other vertex joins the least
/// admissible cell among the u_i it is adjacent to. Throws FalsificationError
/// when some vertex has no admissible cell.
PiPartition build_pi_partition(const Graph& g, const AlliedPartition& ap);

/// Empty when the partition satisfies every structural rule, else the first
/// violated rule.
std::optional<std::string> pi_partition_violation(const Graph& g, const AlliedPartition& ap, const PiPartition& pi);

/// Throws PreconditionError when d does not semi-totally dominate the product.
std::vector<ProjectionProfile> project_profiles(const ProductGraph& prod, const VertexSet& d, const PiPartition& pi);

CoverIndex build_cover_index(const ProductGraph& prod, const VertexSet& d, const PiPartition& pi,
                             const std::vector<ProjectionProfile>& profiles);

/// D^v projected onto G.
VertexSet column_projection(const ProductGraph& prod, const VertexSet& d, int v);

enum class CheckStatus { Pass, Fail, NotApplicable };
std::string_view check_status_name(CheckStatus status);

struct ColumnCheck {
    int v = 0;
    int row_hits = 0;       // |R^v|
    int column_weight = 0;  // |D^v|
    bool ok = true;
};

struct Claim1Report {
    CheckStatus status = CheckStatus::NotApplicable;
    std::vector<ColumnCheck> columns;
};

/// Per-column |R^v| <= 2|D^v|. Only applicable when |d| equals the known
/// minimum `gamma_t2_product`; otherwise NotApplicable.
Claim1Report check_claim1(const ProductGraph& prod, const VertexSet& d, const CoverIndex& cover,
                          int gamma_t2_product);

/// The semi-total dominating set of G assembled from column v.
struct TConstruction {
    int v = 0;
    VertexSet b;  // projection of D^v
    VertexSet allied_rest;  // allied u_i with (i,v) ∉ R^v
    VertexSet free_rest;    // free u_i with (i,v) ∉ R^v and u_i ∉ B^v
    VertexSet a;  // chosen neighbours x_i of free u_i ∈ B^v with (i,v) ∉ R^v
    VertexSet s;  // free u_j with (j,v) ∈ R^v recruited as partners
    VertexSet t;

    int size_bound = 0;  // 2|D^v| + γ_t2(G) − |R^v|
    bool semitotal = false;
    bool within_bound = false;
};

TConstruction construct_t(const ProductGraph& prod, const VertexSet& d, const AlliedPartition& ap,
                          const PiPartition& pi, const CoverIndex& cover, int v);

struct ConnectorResult {
    VertexSet connectors;  // X_i in H
    bool within_bound = false;  // |X_i| <= max(|r_i| − 1, 0)
    bool semitotal = false;     // m_i ∪ p_i ∪ X_i semi-totally dominates H
};

/// Joins the vertices of r_i pairwise at distance exactly 3 by a spanning
/// forest (edges taken in lexicographic order) and picks, per forest edge,
/// the least vertex within distance 2 of both endpoints.
ConnectorResult construct_claim2_connectors(const Graph& h, const ProjectionProfile& profile);

struct ReplayFinding {
    std::string check;      // pi_valid, claim1, t_construct, claim2, eq1, eq2, eq3, chain, double_count
    std::string predicate;  // the predicate that failed
    bool critical = false;  // true: contradicts a step the argument asserts outright
    std::string detail;
    int cell = -1;
    int column = -1;
    std::vector<int> witness;  // offending set, in the space the check lives in
};

/// Every step of the one-third bound argument replayed on a concrete
/// minimum set d of G□H.
struct ReplayReport {
    AlliedPartition allied;
    PiPartition pi;
    std::vector<ProjectionProfile> profiles;
    CoverIndex cover;

    CheckStatus pi_valid = CheckStatus::NotApplicable;
    CheckStatus claim1 = CheckStatus::NotApplicable;
    CheckStatus t_construct = CheckStatus::NotApplicable;
    CheckStatus claim2 = CheckStatus::NotApplicable;
    CheckStatus double_count = CheckStatus::NotApplicable;
    CheckStatus eq1 = CheckStatus::NotApplicable;
    CheckStatus eq2 = CheckStatus::NotApplicable;
    CheckStatus eq3 = CheckStatus::NotApplicable;
    CheckStatus chain = CheckStatus::NotApplicable;

    int claim2_pass = 0;
    int claim2_fail = 0;
    bool claim2_within_bound = true;
    int t_checked = 0;
    int t_failed = 0;

    long long missing_plus_uncovered = 0;  // Σ_i (|m_i| + |r_i|)
    long long product_target = 0;          // γ_t2(G)·γ_t2(H)

    std::vector<ReplayFinding> findings;

    bool has_critical() const;
};

/// Runs allied split, π-partition, profiles, cover index, column checks and
/// T for every v, connectors for every cell, and the three counting
/// inequalities. Never throws on a failed check; failures become findings.
ReplayReport replay_one_third_bound(const ProductGraph& prod, const VertexSet& d, int gamma_t2_g, int gamma_t2_h,
                                    int gamma_t2_product);

}  // namespace semitotal

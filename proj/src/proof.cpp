#include "semitotal/proof.hpp"

#include <algorithm>
#include <numeric>

#include "semitotal/errors.hpp"
#include "semitotal/solvers.hpp"

namespace semitotal {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

AlliedPartition split(const Graph& g, const VertexSet& u) {
    AlliedPartition ap{u, g.empty_set(), g.empty_set(), {}};
    for (int v : u) {
        if (g.neighbors(v).intersects(u))
            ap.x.insert(v);
        else
            ap.y.insert(v);
    }
    for (int v : ap.x) ap.order.push_back(v);
    for (int v : ap.y) ap.order.push_back(v);
    return ap;
}

// v ∈ D^v's column restricted to the product, as a product-space set.
VertexSet column_set(const ProductGraph& prod, const VertexSet& d, int v) {
    VertexSet out(prod.graph().order());
    for (int x = 0; x < prod.n_g(); ++x)
        if (int idx = prod.encode(x, v); d.contains(idx)) out.insert(idx);
    return out;
}

int distance_to_set(const Graph& g, int v, const VertexSet& s) {
    int best = Graph::kUnreachable;
    for (int w : s) best = std::min(best, g.dist(v, w));
    return best;
}

}  // namespace

int PiPartition::cell_of(int w) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].contains(w)) return static_cast<int>(i);
    return -1;
}

std::vector<std::pair<int, int>> CoverIndex::entries() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n_h; ++v)
            if (contains(i, v)) out.emplace_back(i, v);
    return out;
}

std::string_view check_status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "skipped";
    }
    return "skipped";
}

AlliedPartition allied_split(const Graph& g, const VertexSet& u) {
    if (!is_semitotal_dominating(g, u))
        throw PreconditionError("allied_split: is_semitotal_dominating failed for " + u.to_string());
    const int minimum = solve_bnb(g, Invariant::GammaT2).value;
    if (u.size() != minimum)
        throw PreconditionError("allied_split: set " + u.to_string() + " is not minimum (|u|=" +
                                std::to_string(u.size()) + ", gamma_t2=" + std::to_string(minimum) + ")");
    return split(g, u);
}

AlliedPartition max_allied_set(const Graph& g) {
    std::optional<AlliedPartition> best;
    for (const VertexSet& u : enumerate_min_semitotal_sets(g)) {
        AlliedPartition ap = split(g, u);
        if (!best || ap.allied_count() > best->allied_count()) best = std::move(ap);
    }
    if (!best) throw FalsificationError("no minimum semi-total dominating set found");
    return *std::move(best);
}

PiPartition build_pi_partition(const Graph& g, const AlliedPartition& ap) {
    const int k = ap.k();
    const int allied = ap.allied_count();
    PiPartition pi{std::vector<VertexSet>(at(k), g.empty_set())};
    std::vector<int> position(at(g.order()), -1);
    for (int i = 0; i < k; ++i) position[at(ap.order[at(i)])] = i;

    for (int w = 0; w < g.order(); ++w) {
        const int own = position[at(w)];
        if (own >= allied) {
            pi.cells[at(own)].insert(w);
            continue;
        }
        int chosen = -1;
        for (int i = 0; i < k && chosen < 0; ++i) {
            const int ui = ap.order[at(i)];
            if (!g.adjacent(w, ui)) continue;
            if (i >= allied && own < 0) {
                // A free cell is closed to w when w is a common neighbour of
                // u_i and some allied vertex at distance two from u_i.
                bool blocked = false;
                for (int j = 0; j < allied && !blocked; ++j) {
                    const int uj = ap.order[at(j)];
                    blocked = g.dist(uj, ui) == 2 && g.adjacent(w, uj);
                }
                if (blocked) continue;
            }
            chosen = i;
        }
        if (chosen < 0)
            throw FalsificationError("pi partition: vertex " + std::to_string(w) + " has no admissible cell");
        pi.cells[at(chosen)].insert(w);
    }
    return pi;
}

std::optional<std::string> pi_partition_violation(const Graph& g, const AlliedPartition& ap, const PiPartition& pi) {
    const int k = ap.k();
    const int allied = ap.allied_count();
    if (static_cast<int>(pi.cells.size()) != k)
        return "expected " + std::to_string(k) + " cells, found " + std::to_string(pi.cells.size());
    VertexSet seen = g.empty_set();
    for (const VertexSet& cell : pi.cells) {
        if (cell.intersects(seen)) return std::string("cells overlap");
        seen |= cell;
    }
    if (seen != g.all_vertices()) return "cells miss vertices " + (g.all_vertices() - seen).to_string();
    for (int i = 0; i < k; ++i) {
        const int ui = ap.order[at(i)];
        const VertexSet& cell = pi.cells[at(i)];
        if (i < allied) {
            if (!cell.is_subset_of(g.neighbors(ui)))
                return "allied cell " + std::to_string(i) + " leaves N(u_i)";
        } else {
            if (!cell.contains(ui)) return "free cell " + std::to_string(i) + " lacks its own vertex";
            if (!cell.is_subset_of(closed_neighborhood(g, VertexSet(g.order(), {ui}))))
                return "free cell " + std::to_string(i) + " leaves N[u_j]";
        }
    }
    for (int i = 0; i < allied; ++i)
        for (int j = allied; j < k; ++j) {
            const int ui = ap.order[at(i)];
            const int uj = ap.order[at(j)];
            if (g.dist(ui, uj) != 2) continue;
            if ((g.neighbors(ui) & g.neighbors(uj) & pi.cells[at(j)]).empty()) continue;
            return "free cell " + std::to_string(j) + " holds a common neighbour with allied u_" + std::to_string(i);
        }
    return std::nullopt;
}

VertexSet column_projection(const ProductGraph& prod, const VertexSet& d, int v) {
    VertexSet out = prod.left().empty_set();
    for (int x = 0; x < prod.n_g(); ++x)
        if (d.contains(prod.encode(x, v))) out.insert(x);
    return out;
}

std::vector<ProjectionProfile> project_profiles(const ProductGraph& prod, const VertexSet& d, const PiPartition& pi) {
    if (!is_semitotal_dominating(prod.graph(), d))
        throw PreconditionError("project_profiles: d is not a semi-total dominating set of the product");
    const Graph& h = prod.right();
    std::vector<ProjectionProfile> out;
    for (std::size_t i = 0; i < pi.cells.size(); ++i) {
        ProjectionProfile prof{static_cast<int>(i), prod.graph().empty_set(), h.empty_set(), h.empty_set(),
                               h.empty_set(), h.empty_set()};
        for (int idx : d) {
            auto [x, y] = prod.decode(idx);
            if (!pi.cells[i].contains(x)) continue;
            prof.d.insert(idx);
            prof.p.insert(y);
        }
        prof.m = h.all_vertices() - closed_neighborhood(h, prof.p);
        const VertexSet reach = prof.p | prof.m;
        for (int v : prof.p) {
            bool covered = false;
            for (int w : reach)
                if (w != v && h.dist(v, w) <= 2) {
                    covered = true;
                    break;
                }
            (covered ? prof.q : prof.r).insert(v);
        }
        out.push_back(std::move(prof));
    }
    return out;
}

CoverIndex build_cover_index(const ProductGraph& prod, const VertexSet& d, const PiPartition& pi,
                             const std::vector<ProjectionProfile>& profiles) {
    CoverIndex c;
    c.k = static_cast<int>(pi.cells.size());
    c.n_h = prod.n_h();
    c.member.assign(at(c.k * c.n_h), 0);
    c.row_counts.assign(at(c.k), 0);
    c.column_counts.assign(at(c.n_h), 0);
    for (int v = 0; v < c.n_h; ++v) {
        const VertexSet dv = column_set(prod, d, v);
        for (int i = 0; i < c.k; ++i) {
            bool horizontal = true;
            for (int x : pi.cells[at(i)])
                if (!prod.graph().neighbors(prod.encode(x, v)).intersects(dv)) {
                    horizontal = false;
                    break;
                }
            if (horizontal || profiles[at(i)].r.contains(v)) {
                c.member[at(i * c.n_h + v)] = 1;
                ++c.row_counts[at(i)];
                ++c.column_counts[at(v)];
                ++c.total;
            }
        }
    }
    return c;
}

Claim1Report check_claim1(const ProductGraph& prod, const VertexSet& d, const CoverIndex& cover,
                          int gamma_t2_product) {
    Claim1Report report;
    if (d.size() != gamma_t2_product) return report;
    report.status = CheckStatus::Pass;
    for (int v = 0; v < prod.n_h(); ++v) {
        ColumnCheck col{v, cover.column_counts[at(v)], column_projection(prod, d, v).size(), true};
        col.ok = col.row_hits <= 2 * col.column_weight;
        if (!col.ok) report.status = CheckStatus::Fail;
        report.columns.push_back(col);
    }
    return report;
}

TConstruction construct_t(const ProductGraph& prod, const VertexSet& d, const AlliedPartition& ap,
                          const PiPartition& pi, const CoverIndex& cover, int v) {
    const Graph& g = prod.left();
    const int k = ap.k();
    const int allied = ap.allied_count();
    TConstruction tc;
    tc.v = v;
    tc.b = column_projection(prod, d, v);
    tc.allied_rest = tc.free_rest = tc.a = tc.s = g.empty_set();

    for (int i = 0; i < k; ++i) {
        if (cover.contains(i, v)) continue;
        const int ui = ap.order[at(i)];
        if (i < allied) {
            tc.allied_rest.insert(ui);
        } else if (!tc.b.contains(ui)) {
            tc.free_rest.insert(ui);
        } else {
            // Partner for a free u_i already in B^v: a neighbour inside its own
            // cell when there is one, otherwise any neighbour.
            VertexSet inside = g.neighbors(ui) & pi.cells[at(i)];
            tc.a.insert(inside.empty() ? g.neighbors(ui).first() : inside.first());
        }
    }

    // Free u outside R^v that sit at distance >= 3 from every allied vertex
    // need a free partner at distance 2; recruit one from R^v when none of
    // their partners are already present.
    for (int i = allied; i < k; ++i) {
        if (cover.contains(i, v)) continue;
        const int ui = ap.order[at(i)];
        if (!ap.x.empty() && distance_to_set(g, ui, ap.x) < 3) continue;
        int recruit = -1;
        bool present = false;
        for (int j = allied; j < k && !present; ++j) {
            const int uj = ap.order[at(j)];
            if (j == i || g.dist(ui, uj) != 2) continue;
            if (!cover.contains(j, v))
                present = true;
            else if (recruit < 0)
                recruit = uj;
        }
        if (!present && recruit >= 0) tc.s.insert(recruit);
    }

    tc.t = tc.b | tc.allied_rest | tc.free_rest | tc.a | tc.s;
    tc.size_bound = 2 * tc.b.size() + k - cover.column_counts[at(v)];
    tc.semitotal = is_semitotal_dominating(g, tc.t);
    tc.within_bound = tc.t.size() <= tc.size_bound;
    return tc;
}

ConnectorResult construct_claim2_connectors(const Graph& h, const ProjectionProfile& profile) {
    ConnectorResult out{h.empty_set(), false, false};
    const std::vector<int> r = profile.r.members();
    std::vector<int> parent(r.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != static_cast<int>(a)) a = static_cast<std::size_t>(parent[a] = parent[at(parent[a])]);
        return a;
    };
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = a + 1; b < r.size(); ++b) {
            if (h.dist(r[a], r[b]) != 3) continue;
            std::size_t ra = find(a), rb = find(b);
            if (ra == rb) continue;
            parent[rb] = static_cast<int>(ra);
            for (int z = 0; z < h.order(); ++z)
                if (h.dist(z, r[a]) <= 2 && h.dist(z, r[b]) <= 2) {
                    out.connectors.insert(z);
                    break;
                }
        }
    const int limit = std::max(static_cast<int>(r.size()) - 1, 0);
    out.within_bound = out.connectors.size() <= limit;
    out.semitotal = is_semitotal_dominating(h, profile.m | profile.p | out.connectors);
    return out;
}

bool ReplayReport::has_critical() const {
    return std::any_of(findings.begin(), findings.end(), [](const ReplayFinding& f) { return f.critical; });
}

ReplayReport replay_one_third_bound(const ProductGraph& prod, const VertexSet& d, int gamma_t2_g, int gamma_t2_h,
                                    int gamma_t2_product) {
    const Graph& g = prod.left();
    const Graph& h = prod.right();
    ReplayReport rep;
    rep.product_target = static_cast<long long>(gamma_t2_g) * gamma_t2_h;
    auto finding = [&](std::string check, std::string predicate, bool critical, std::string detail) -> ReplayFinding& {
        rep.findings.push_back({std::move(check), std::move(predicate), critical, std::move(detail), -1, -1, {}});
        return rep.findings.back();
    };

    rep.allied = max_allied_set(g);
    try {
        rep.pi = build_pi_partition(g, rep.allied);
    } catch (const FalsificationError& e) {
        rep.pi_valid = CheckStatus::Fail;
        finding("pi_valid", "admissible_cell_exists", true, e.what());
        return rep;
    }
    if (auto why = pi_partition_violation(g, rep.allied, rep.pi)) {
        rep.pi_valid = CheckStatus::Fail;
        finding("pi_valid", "pi_partition_rules", true, *why);
        return rep;
    }
    rep.pi_valid = CheckStatus::Pass;

    rep.profiles = project_profiles(prod, d, rep.pi);
    rep.cover = build_cover_index(prod, d, rep.pi, rep.profiles);
    const bool minimum = d.size() == gamma_t2_product;

    const long long by_rows = std::accumulate(rep.cover.row_counts.begin(), rep.cover.row_counts.end(), 0LL);
    const long long by_cols = std::accumulate(rep.cover.column_counts.begin(), rep.cover.column_counts.end(), 0LL);
    rep.double_count = by_rows == by_cols && by_rows == rep.cover.total ? CheckStatus::Pass : CheckStatus::Fail;
    if (rep.double_count == CheckStatus::Fail)
        finding("double_count", "rows_equal_columns", true,
                "rows " + std::to_string(by_rows) + " columns " + std::to_string(by_cols));

    Claim1Report c1 = check_claim1(prod, d, rep.cover, gamma_t2_product);
    rep.claim1 = c1.status;
    for (const ColumnCheck& col : c1.columns)
        if (!col.ok) {
            auto& f = finding("claim1", "column_hits_at_most_twice_column_weight", true,
                              "|R^v|=" + std::to_string(col.row_hits) + " > 2|D^v|=" +
                                  std::to_string(2 * col.column_weight));
            f.column = col.v;
        }

    if (minimum) {
        rep.t_construct = CheckStatus::Pass;
        for (int v = 0; v < prod.n_h(); ++v) {
            TConstruction tc = construct_t(prod, d, rep.allied, rep.pi, rep.cover, v);
            ++rep.t_checked;
            if (tc.semitotal && tc.within_bound) continue;
            ++rep.t_failed;
            rep.t_construct = CheckStatus::Fail;
            auto& f = finding("t_construct", tc.semitotal ? "t_size_within_bound" : "is_semitotal_dominating", true,
                              "|T|=" + std::to_string(tc.t.size()) + " bound=" + std::to_string(tc.size_bound));
            f.column = v;
            f.witness = tc.t.members();
        }
    }

    rep.claim2 = CheckStatus::Pass;
    for (const ProjectionProfile& prof : rep.profiles) {
        ConnectorResult cr = construct_claim2_connectors(h, prof);
        rep.claim2_within_bound = rep.claim2_within_bound && cr.within_bound;
        if (cr.semitotal) {
            ++rep.claim2_pass;
            // Consequences used downstream of the connector claim.
            const bool summand = prof.m.size() + prof.r.size() >= gamma_t2_h - prof.p.size();
            const bool budget = !cr.connectors.intersects(prof.q) &&
                                cr.connectors.size() + prof.q.size() <= prof.p.size();
            if (!summand) {
                auto& f = finding("claim2", "cell_summand_bound", true,
                                  "|m|+|r| < gamma_t2(H) - |p| although m ∪ p ∪ X validated");
                f.cell = prof.index;
                f.witness = cr.connectors.members();
            }
            if (!budget) {
                auto& f = finding("claim2", "connectors_disjoint_from_covered", false,
                                  "X_i meets q_i or |X_i|+|q_i| > |p_i|");
                f.cell = prof.index;
                f.witness = cr.connectors.members();
            }
        } else {
            ++rep.claim2_fail;
            rep.claim2 = CheckStatus::Fail;
            auto& f = finding("claim2", "is_semitotal_dominating", false,
                              "m ∪ p ∪ X is not semi-total dominating in H (|r|=" + std::to_string(prof.r.size()) +
                                  ", |X|=" + std::to_string(cr.connectors.size()) + ")");
            f.cell = prof.index;
            f.witness = (prof.m | prof.p | cr.connectors).members();
        }
        if (!cr.within_bound) {
            auto& f = finding("claim2", "connector_count_within_bound", true, "|X_i| exceeds max(|r_i|-1, 0)");
            f.cell = prof.index;
        }
    }

    for (const ProjectionProfile& prof : rep.profiles) rep.missing_plus_uncovered += prof.m.size() + prof.r.size();
    const long long n_total = rep.cover.total;
    const long long dsize = d.size();

    rep.eq1 = n_total >= rep.missing_plus_uncovered ? CheckStatus::Pass : CheckStatus::Fail;
    if (rep.eq1 == CheckStatus::Fail)
        finding("eq1", "N_at_least_missing_plus_uncovered", true,
                "N=" + std::to_string(n_total) + " < " + std::to_string(rep.missing_plus_uncovered));

    if (minimum) {
        rep.eq2 = n_total <= 2 * dsize ? CheckStatus::Pass : CheckStatus::Fail;
        if (rep.eq2 == CheckStatus::Fail)
            finding("eq2", "N_at_most_twice_d", true, "N=" + std::to_string(n_total) + " > 2|d|=" +
                                                          std::to_string(2 * dsize));
    }

    rep.eq3 = rep.missing_plus_uncovered >= rep.product_target - dsize ? CheckStatus::Pass : CheckStatus::Fail;
    if (rep.eq3 == CheckStatus::Fail)
        finding("eq3", "missing_plus_uncovered_at_least_target_minus_d", rep.claim2_fail == 0,
                "sum=" + std::to_string(rep.missing_plus_uncovered) + " < " +
                    std::to_string(rep.product_target - dsize) +
                    (rep.claim2_fail > 0 ? " (connector validation failed on some cell)" : ""));

    if (minimum) {
        // (1)+(2)+(3): target − |d| <= Σ <= N <= 2|d|, so 3|d| >= target.
        const bool links = rep.eq1 == CheckStatus::Pass && rep.eq2 == CheckStatus::Pass &&
                           rep.eq3 == CheckStatus::Pass;
        const bool chained = rep.product_target - dsize <= rep.missing_plus_uncovered &&
                             rep.missing_plus_uncovered <= n_total && n_total <= 2 * dsize &&
                             3 * dsize >= rep.product_target;
        rep.chain = links && chained ? CheckStatus::Pass : CheckStatus::Fail;
        if (rep.chain == CheckStatus::Fail)
            finding("chain", "three_d_at_least_target", 3 * dsize < rep.product_target,
                    "3|d|=" + std::to_string(3 * dsize) + " target=" + std::to_string(rep.product_target));
    }
    return rep;
}

}  // namespace semitotal

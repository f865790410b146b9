#include "semitotal/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semitotal/errors.hpp"

namespace semitotal {

std::string_view invariant_name(Invariant kind) {
    switch (kind) {
        case Invariant::Gamma: return "gamma";
        case Invariant::GammaT: return "gamma_t";
        case Invariant::GammaT2: return "gamma_t2";
        case Invariant::Rho: return "rho";
    }
    return "unknown";
}

std::optional<Invariant> invariant_from_name(std::string_view name) {
    for (Invariant k : {Invariant::Gamma, Invariant::GammaT, Invariant::GammaT2, Invariant::Rho})
        if (invariant_name(k) == name) return k;
    return std::nullopt;
}

std::string_view method_name(Method method) {
    return method == Method::Oracle ? "oracle" : "branch_and_bound";
}

namespace {

bool semitotal_unchecked(const Graph& g, const VertexSet& s) {
    if (closed_neighborhood(g, s) != g.all_vertices()) return false;
    for (int u : s) {
        bool partner = false;
        for (int v : s)
            if (v != u && g.dist(u, v) <= 2) {
                partner = true;
                break;
            }
        if (!partner) return false;
    }
    return true;
}

void require_isolate_free(const Graph& g, Invariant kind) {
    if (kind != Invariant::Rho && !is_isolate_free(g))
        throw PreconditionError(std::string(invariant_name(kind)) + " requires an isolate-free graph");
}

bool check(const Graph& g, Invariant kind, const VertexSet& s) {
    switch (kind) {
        case Invariant::Gamma: return is_dominating(g, s);
        case Invariant::GammaT: return is_total_dominating(g, s);
        case Invariant::GammaT2: return semitotal_unchecked(g, s);
        case Invariant::Rho: return is_two_packing(g, s);
    }
    return false;
}

/// Visits the k-subsets of 0..n-1 in lexicographic order until `visit` returns true.
template <typename Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
    if (k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (visit(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void guard_oracle(const Graph& g) {
    if (g.order() > kOracleMaxOrder)
        throw OracleGuardError("graph with " + std::to_string(g.order()) + " vertices is too large for oracle (max " +
                               std::to_string(kOracleMaxOrder) + ")");
}

std::optional<VertexSet> first_of_size(const Graph& g, Invariant kind, int k) {
    std::optional<VertexSet> found;
    for_each_combination(g.order(), k, [&](const std::vector<int>& idx) {
        VertexSet s(g.order(), idx);
        if (!check(g, kind, s)) return false;
        found = std::move(s);
        return true;
    });
    return found;
}

// Domination-type search over three closure rules: closed neighbourhoods
// (gamma), open neighbourhoods (gamma_t), closed plus a partner within
// distance two for every chosen vertex (gamma_t2).
class DominationSearch {
public:
    DominationSearch(const Graph& g, Invariant kind) : g_(g), semitotal_(kind == Invariant::GammaT2) {
        const int n = g.order();
        const bool closed = kind != Invariant::GammaT;
        cover_.resize(static_cast<std::size_t>(n));
        ball2_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            if (closed) cover_[idx(v)].push_back(v);
            for (int w : g.neighbors(v)) cover_[idx(v)].push_back(w);
            if (semitotal_)
                for (int w = 0; w < n; ++w)
                    if (w != v && g.dist(v, w) <= 2) ball2_[idx(v)].push_back(w);
        }
        max_cover_ = g.max_degree() + (closed ? 1 : 0);
        selected_.assign(static_cast<std::size_t>(n), 0);
        excluded_.assign(static_cast<std::size_t>(n), 0);
        dom_count_.assign(static_cast<std::size_t>(n), 0);
        partner_count_.assign(static_cast<std::size_t>(n), 0);
        gain_.assign(static_cast<std::size_t>(n), 0);
        undominated_ = n;
        best_size_ = n + 1;
    }

    VertexSet run() {
        search();
        return VertexSet(g_.order(), best_);
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    void select(int c) {
        selected_[idx(c)] = 1;
        chosen_.push_back(c);
        for (int w : cover_[idx(c)])
            if (dom_count_[idx(w)]++ == 0) --undominated_;
        if (!semitotal_) return;
        if (partner_count_[idx(c)] == 0) ++partnerless_;
        for (int w : ball2_[idx(c)])
            if (++partner_count_[idx(w)] == 1 && selected_[idx(w)]) --partnerless_;
    }

    void unselect(int c) {
        selected_[idx(c)] = 0;
        chosen_.pop_back();
        for (int w : cover_[idx(c)])
            if (--dom_count_[idx(w)] == 0) ++undominated_;
        if (!semitotal_) return;
        for (int w : ball2_[idx(c)])
            if (--partner_count_[idx(w)] == 0 && selected_[idx(w)]) ++partnerless_;
        if (partner_count_[idx(c)] == 0) --partnerless_;
    }

    bool available(int c) const { return !selected_[idx(c)] && !excluded_[idx(c)]; }

    // Fewest chosen vertices still needed; n+1 when the state is infeasible.
    int lower_bound() {
        const int n = g_.order();
        if (undominated_ == 0) return semitotal_ && partnerless_ > 0 ? 1 : 0;
        int naive = (undominated_ + max_cover_ - 1) / max_cover_;
        std::fill(gain_.begin(), gain_.end(), 0);
        for (int u = 0; u < n; ++u)
            if (dom_count_[idx(u)] == 0)
                for (int w : cover_[idx(u)])
                    if (available(w)) ++gain_[idx(w)];
        // Bucket the gains and take the largest until every undominated vertex could be covered.
        std::vector<int> buckets(static_cast<std::size_t>(max_cover_ + 1), 0);
        for (int v = 0; v < n; ++v) ++buckets[idx(gain_[idx(v)])];
        int need = undominated_;
        int picks = 0;
        for (int gsize = max_cover_; gsize > 0 && need > 0; --gsize) {
            int take = std::min(buckets[idx(gsize)], (need + gsize - 1) / gsize);
            picks += take;
            need -= take * gsize;
        }
        if (need > 0) return n + 1;
        return std::max(naive, picks);
    }

    void branch_on(const std::vector<int>& candidates) {
        std::vector<int> tried;
        for (int c : candidates) {
            select(c);
            search();
            unselect(c);
            excluded_[idx(c)] = 1;
            tried.push_back(c);
        }
        for (int c : tried) excluded_[idx(c)] = 0;
    }

    void search() {
        const int size = static_cast<int>(chosen_.size());
        if (size + lower_bound() >= best_size_) return;
        const int n = g_.order();
        if (undominated_ > 0) {
            int pick = -1;
            int pick_count = n + 1;
            for (int u = 0; u < n; ++u) {
                if (dom_count_[idx(u)] != 0) continue;
                int count = 0;
                for (int w : cover_[idx(u)]) count += available(w) ? 1 : 0;
                if (count < pick_count) {
                    pick = u;
                    pick_count = count;
                }
            }
            if (pick_count == 0) return;
            std::vector<std::pair<int, int>> ranked;
            for (int w : cover_[idx(pick)]) {
                if (!available(w)) continue;
                int fresh = 0;
                for (int x : cover_[idx(w)]) fresh += dom_count_[idx(x)] == 0 ? 1 : 0;
                ranked.emplace_back(-fresh, w);
            }
            std::sort(ranked.begin(), ranked.end());
            std::vector<int> candidates;
            for (auto [neg, w] : ranked) candidates.push_back(w);
            branch_on(candidates);
            return;
        }
        if (semitotal_ && partnerless_ > 0) {
            int pick = -1;
            std::size_t pick_count = idx(n) + 1;
            std::vector<int> best_candidates;
            for (int s : chosen_) {
                if (partner_count_[idx(s)] != 0) continue;
                std::vector<int> candidates;
                for (int w : ball2_[idx(s)])
                    if (available(w)) candidates.push_back(w);
                if (candidates.size() < pick_count) {
                    pick = s;
                    pick_count = candidates.size();
                    best_candidates = std::move(candidates);
                }
            }
            if (pick < 0 || best_candidates.empty()) return;
            branch_on(best_candidates);
            return;
        }
        best_size_ = size;
        best_ = chosen_;
    }

    const Graph& g_;
    bool semitotal_;
    std::vector<std::vector<int>> cover_;
    std::vector<std::vector<int>> ball2_;
    int max_cover_ = 1;
    std::vector<char> selected_;
    std::vector<char> excluded_;
    std::vector<int> dom_count_;
    std::vector<int> partner_count_;
    std::vector<int> gain_;
    std::vector<int> chosen_;
    int undominated_ = 0;
    int partnerless_ = 0;
    int best_size_ = 0;
    std::vector<int> best_;
};

// Maximum independent set with a greedy clique-cover bound.
class IndependentSetSearch {
public:
    explicit IndependentSetSearch(std::vector<VertexSet> conflicts) : conflicts_(std::move(conflicts)) {}

    VertexSet run(int n) {
        VertexSet current(n);
        search(VertexSet::full(n), current);
        return best_;
    }

private:
    int clique_cover(VertexSet left) const {
        int cliques = 0;
        while (!left.empty()) {
            ++cliques;
            VertexSet q = left;
            while (!q.empty()) {
                int v = q.first();
                left.erase(v);
                q.erase(v);
                q &= conflicts_[static_cast<std::size_t>(v)];
            }
        }
        return cliques;
    }

    void search(VertexSet candidates, VertexSet& current) {
        const int size = current.size();
        if (candidates.empty()) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = current;
            }
            return;
        }
        if (size + clique_cover(candidates) <= best_size_) return;
        int pick = -1;
        int pick_degree = 0;
        for (int v : candidates) {
            int d = (conflicts_[static_cast<std::size_t>(v)] & candidates).size();
            if (pick < 0 || d < pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        current.insert(pick);
        search(candidates - conflicts_[static_cast<std::size_t>(pick)] - VertexSet(candidates.width(), {pick}),
               current);
        current.erase(pick);
        if (pick_degree == 0) return;
        candidates.erase(pick);
        search(std::move(candidates), current);
    }

    std::vector<VertexSet> conflicts_;
    int best_size_ = -1;
    VertexSet best_;
};

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) { return closed_neighborhood(g, s) == g.all_vertices(); }

bool is_total_dominating(const Graph& g, const VertexSet& s) { return open_neighborhood(g, s) == g.all_vertices(); }

bool is_semitotal_dominating(const Graph& g, const VertexSet& s) {
    if (!is_isolate_free(g)) throw PreconditionError("semi-total domination requires an isolate-free graph");
    return semitotal_unchecked(g, s);
}

bool is_two_packing(const Graph& g, const VertexSet& s) {
    for (int u : s)
        for (int v = s.next(u + 1); v < s.width(); v = s.next(v + 1))
            if (g.dist(u, v) < 3) return false;
    return true;
}

bool satisfies(const Graph& g, Invariant kind, const VertexSet& s) {
    if (kind == Invariant::GammaT2) return is_semitotal_dominating(g, s);
    return check(g, kind, s);
}

InvariantResult solve_oracle(const Graph& g, Invariant kind) {
    guard_oracle(g);
    require_isolate_free(g, kind);
    const int n = g.order();
    if (kind == Invariant::Rho) {
        VertexSet best(n, {0});
        for (int k = 2; k <= n; ++k) {
            auto found = first_of_size(g, kind, k);
            if (!found) break;
            best = std::move(*found);
        }
        int value = best.size();
        return {kind, value, std::move(best), Method::Oracle};
    }
    for (int k = 1; k <= n; ++k)
        if (auto found = first_of_size(g, kind, k)) return {kind, k, std::move(*found), Method::Oracle};
    throw FalsificationError("oracle found no " + std::string(invariant_name(kind)) + " set on an isolate-free graph");
}

InvariantResult solve_bnb(const Graph& g, Invariant kind) {
    require_isolate_free(g, kind);
    if (kind == Invariant::Rho) {
        std::vector<VertexSet> conflicts;
        conflicts.reserve(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) conflicts.push_back(ball(g, v, 2));
        VertexSet witness = IndependentSetSearch(std::move(conflicts)).run(g.order());
        int value = witness.size();
        return {kind, value, std::move(witness), Method::BranchAndBound};
    }
    VertexSet witness = DominationSearch(g, kind).run();
    if (witness.empty())
        throw FalsificationError("branch and bound found no " + std::string(invariant_name(kind)) + " set");
    int value = witness.size();
    return {kind, value, std::move(witness), Method::BranchAndBound};
}

InvariantResult solve(const Graph& g, Invariant kind, Method method) {
    return method == Method::Oracle ? solve_oracle(g, kind) : solve_bnb(g, kind);
}

std::vector<VertexSet> enumerate_min_semitotal_sets(const Graph& g) {
    guard_oracle(g);
    const int k = solve_oracle(g, Invariant::GammaT2).value;
    std::vector<VertexSet> out;
    for_each_combination(g.order(), k, [&](const std::vector<int>& idx) {
        VertexSet s(g.order(), idx);
        if (semitotal_unchecked(g, s)) out.push_back(std::move(s));
        return false;
    });
    return out;
}

}  // namespace semitotal

#ifndef THICKLAB_SOLVER_HPP
#define THICKLAB_SOLVER_HPP

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "thicklab/graph.hpp"
#include "thicklab/planarity.hpp"

namespace thicklab {

struct SolverOptions {
    std::uint64_t node_cap = 100'000'000;  // search nodes before refusing
    int edge_budget = 36;                  // largest |E| accepted
    int threads = 1;                       // > 1 splits the search frontier
};

struct SolverStats {
    std::uint64_t nodes = 0;
    std::uint64_t planarity_calls = 0;
};

enum class SolverStatus { solved, exceeds_k_max, refused };

struct SolverResult {
    SolverStatus status = SolverStatus::refused;
    int thickness = 0;                // valid when solved
    std::vector<EdgeList> witness;    // planar decomposition with `thickness` parts
    SolverStats stats;
    std::string refusal_reason;
};

namespace detail {

// Exhaustive search for a k-part planar decomposition.  Edges are assigned
// in a fixed branch order (degree sum descending, so dense spots fail fast);
// part indices are opened in first-use order and edge 0 therefore always
// lands in part 0, which breaks the part-permutation symmetry.  A part is
// pruned as soon as it stops being planar or exceeds the Euler edge bound
// 3v - 6 on the vertices it uses.
class DecompositionSearch {
public:
    DecompositionSearch(const Graph& g, int k, const SolverOptions& opt)
        : g_(g), k_(k), opt_(opt) {
        order_ = g.edges();
        std::stable_sort(order_.begin(), order_.end(), [&g](const Edge& a, const Edge& b) {
            return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
        });
        m_ = static_cast<int>(order_.size());
    }

    enum class Outcome { found, none, aborted };

    Outcome run(std::vector<EdgeList>& witness, SolverStats& stats) {
        nodes_.store(0);
        found_.store(false);
        aborted_.store(false);
        Outcome outcome;
        if (opt_.threads <= 1 || m_ < 4) {
            Worker w(*this);
            outcome = w.search_root();
            stats.planarity_calls += w.planarity_calls;
        } else {
            outcome = run_parallel(stats);
        }
        stats.nodes += nodes_.load();
        if (outcome == Outcome::found) witness = take_witness();
        return outcome;
    }

private:
    struct Worker {
        explicit Worker(DecompositionSearch& s)
            : search(s), assignment(static_cast<std::size_t>(s.m_), -1) {
            part_edges.assign(static_cast<std::size_t>(s.k_), 0);
            part_masks.assign(static_cast<std::size_t>(s.k_), 0);
            part_degree.assign(static_cast<std::size_t>(s.k_),
                               std::vector<int>(static_cast<std::size_t>(s.g_.vertex_count()), 0));
            part_vertices.assign(static_cast<std::size_t>(s.k_), 0);
        }

        DecompositionSearch& search;
        std::vector<int> assignment;           // part per edge index, -1 unassigned
        std::vector<int> part_edges;           // edge count per part
        std::vector<std::uint64_t> part_masks; // edge-index bitmask per part
        std::vector<std::vector<int>> part_degree;
        std::vector<int> part_vertices;        // vertices touched per part
        int used_parts = 0;
        std::uint64_t planarity_calls = 0;
        std::unordered_map<std::uint64_t, bool> planar_cache;

        bool part_planar(int p) {
            const std::uint64_t mask = part_masks[static_cast<std::size_t>(p)];
            const auto it = planar_cache.find(mask);
            if (it != planar_cache.end()) return it->second;
            EdgeList edges;
            for (int i = 0; i < search.m_; ++i) {
                if (mask & (std::uint64_t{1} << i)) {
                    edges.push_back(search.order_[static_cast<std::size_t>(i)]);
                }
            }
            ++planarity_calls;
            const bool planar = lr_planar(Graph(search.g_.vertex_count(), std::move(edges)));
            planar_cache.emplace(mask, planar);
            return planar;
        }

        void apply(int idx, int p) {
            const Edge& e = search.order_[static_cast<std::size_t>(idx)];
            assignment[static_cast<std::size_t>(idx)] = p;
            part_masks[static_cast<std::size_t>(p)] |= std::uint64_t{1} << idx;
            ++part_edges[static_cast<std::size_t>(p)];
            auto& deg = part_degree[static_cast<std::size_t>(p)];
            if (deg[static_cast<std::size_t>(e.u)]++ == 0) ++part_vertices[static_cast<std::size_t>(p)];
            if (deg[static_cast<std::size_t>(e.v)]++ == 0) ++part_vertices[static_cast<std::size_t>(p)];
            if (p == used_parts) ++used_parts;
        }

        void undo(int idx, int p) {
            const Edge& e = search.order_[static_cast<std::size_t>(idx)];
            assignment[static_cast<std::size_t>(idx)] = -1;
            part_masks[static_cast<std::size_t>(p)] &= ~(std::uint64_t{1} << idx);
            --part_edges[static_cast<std::size_t>(p)];
            auto& deg = part_degree[static_cast<std::size_t>(p)];
            if (--deg[static_cast<std::size_t>(e.u)] == 0) --part_vertices[static_cast<std::size_t>(p)];
            if (--deg[static_cast<std::size_t>(e.v)] == 0) --part_vertices[static_cast<std::size_t>(p)];
            if (p == used_parts - 1 && part_edges[static_cast<std::size_t>(p)] == 0) --used_parts;
        }

        bool admissible(int idx, int p) {
            const Edge& e = search.order_[static_cast<std::size_t>(idx)];
            const auto& deg = part_degree[static_cast<std::size_t>(p)];
            const int verts = part_vertices[static_cast<std::size_t>(p)] +
                              (deg[static_cast<std::size_t>(e.u)] == 0 ? 1 : 0) +
                              (deg[static_cast<std::size_t>(e.v)] == 0 ? 1 : 0);
            const int edges = part_edges[static_cast<std::size_t>(p)] + 1;
            if (verts >= 3 && edges > 3 * verts - 6) return false;
            apply(idx, p);
            const bool planar = part_planar(p);
            if (!planar) undo(idx, p);
            return planar;
        }

        bool tick() {
            if (search.nodes_.fetch_add(1, std::memory_order_relaxed) + 1 >
                search.opt_.node_cap) {
                search.aborted_.store(true, std::memory_order_relaxed);
            }
            return !search.aborted_.load(std::memory_order_relaxed) &&
                   !search.found_.load(std::memory_order_relaxed);
        }

        // depth-first from edge idx; true iff a full assignment was recorded
        bool dfs(int idx) {
            if (idx == search.m_) {
                search.record(*this);
                return true;
            }
            const int limit = std::min(used_parts, search.k_ - 1);
            for (int p = 0; p <= limit; ++p) {
                if (!tick()) return false;
                if (!admissible(idx, p)) continue;
                if (dfs(idx + 1)) return true;
                undo(idx, p);
                if (search.aborted_.load(std::memory_order_relaxed) ||
                    search.found_.load(std::memory_order_relaxed)) {
                    return false;
                }
            }
            return false;
        }

        Outcome search_root() {
            dfs(0);
            if (search.found_.load()) return Outcome::found;
            if (search.aborted_.load()) return Outcome::aborted;
            return Outcome::none;
        }
    };

    friend struct Worker;

    void record(const Worker& w) {
        std::lock_guard<std::mutex> lock(result_mutex_);
        if (found_.load()) return;
        witness_.assign(static_cast<std::size_t>(k_), {});
        for (int i = 0; i < m_; ++i) {
            witness_[static_cast<std::size_t>(w.assignment[static_cast<std::size_t>(i)])]
                .push_back(order_[static_cast<std::size_t>(i)]);
        }
        for (EdgeList& part : witness_) sort_edges(part);
        found_.store(true);
    }

    std::vector<EdgeList> take_witness() {
        std::lock_guard<std::mutex> lock(result_mutex_);
        return witness_;
    }

    // Enumerate assignment prefixes at a shallow depth single-threaded, then
    // let workers exhaust the subtrees concurrently.
    Outcome run_parallel(SolverStats& stats) {
        std::vector<std::vector<int>> frontier{{}};
        int depth = 0;
        while (depth < m_ && static_cast<int>(frontier.size()) < 8 * opt_.threads) {
            Worker probe(*this);
            std::vector<std::vector<int>> next;
            for (const auto& prefix : frontier) {
                for (int i = 0; i < depth; ++i) probe.apply(i, prefix[static_cast<std::size_t>(i)]);
                const int limit = std::min(probe.used_parts, k_ - 1);
                for (int p = 0; p <= limit; ++p) {
                    if (probe.admissible(depth, p)) {
                        probe.undo(depth, p);
                        auto extended = prefix;
                        extended.push_back(p);
                        next.push_back(std::move(extended));
                    }
                }
                for (int i = depth - 1; i >= 0; --i) probe.undo(i, prefix[static_cast<std::size_t>(i)]);
            }
            stats.planarity_calls += probe.planarity_calls;
            nodes_.fetch_add(static_cast<std::uint64_t>(frontier.size()));
            frontier = std::move(next);
            ++depth;
            if (frontier.empty()) return Outcome::none;
        }

        std::atomic<std::size_t> cursor{0};
        std::atomic<std::uint64_t> planarity_total{0};
        auto work = [&]() {
            Worker w(*this);
            while (true) {
                const std::size_t job = cursor.fetch_add(1);
                if (job >= frontier.size() || aborted_.load() || found_.load()) break;
                const auto& prefix = frontier[job];
                for (int i = 0; i < static_cast<int>(prefix.size()); ++i) {
                    w.apply(i, prefix[static_cast<std::size_t>(i)]);
                }
                w.dfs(static_cast<int>(prefix.size()));
                for (int i = static_cast<int>(prefix.size()) - 1; i >= 0; --i) {
                    w.undo(i, prefix[static_cast<std::size_t>(i)]);
                }
            }
            planarity_total.fetch_add(w.planarity_calls);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < opt_.threads; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
        stats.planarity_calls += planarity_total.load();
        if (found_.load()) return Outcome::found;
        if (aborted_.load()) return Outcome::aborted;
        return Outcome::none;
    }

    const Graph& g_;
    int k_;
    SolverOptions opt_;
    EdgeList order_;
    int m_ = 0;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> found_{false};
    std::atomic<bool> aborted_{false};
    std::mutex result_mutex_;
    std::vector<EdgeList> witness_;
};

inline std::optional<std::string> budget_refusal(const Graph& g, const SolverOptions& opt) {
    if (g.edge_count() > opt.edge_budget) {
        return "graph has " + std::to_string(g.edge_count()) + " edges, over the solver budget of " +
               std::to_string(opt.edge_budget);
    }
    if (g.edge_count() > 64) {  // part masks are 64-bit
        return "graph has " + std::to_string(g.edge_count()) +
               " edges; the search supports at most 64";
    }
    return std::nullopt;
}

}  // namespace detail

// Exact thickness by exhaustive search over k = 1, 2, ..., k_max.  The
// returned witness is a valid planar decomposition and the exhausted search
// for k-1 parts certifies minimality.  Budget violations refuse rather than
// answer.
inline SolverResult thickness_exact(const Graph& g, int k_max,
                                    const SolverOptions& opt = SolverOptions{}) {
    SolverResult result;
    if (k_max < 1) throw std::invalid_argument("thickness_exact: k_max must be >= 1");
    if (auto refusal = detail::budget_refusal(g, opt)) {
        result.refusal_reason = *refusal;
        return result;
    }
    ++result.stats.planarity_calls;
    if (lr_planar(g)) {
        result.status = SolverStatus::solved;
        result.thickness = 1;
        result.witness = {g.edges()};
        return result;
    }
    int k_lo = 2;
    if (g.vertex_count() >= 3) {
        const int cap = 3 * g.vertex_count() - 6;
        k_lo = std::max(k_lo, (g.edge_count() + cap - 1) / cap);
    }
    for (int k = k_lo; k <= k_max; ++k) {
        detail::DecompositionSearch search(g, k, opt);
        const auto outcome = search.run(result.witness, result.stats);
        if (outcome == detail::DecompositionSearch::Outcome::found) {
            result.status = SolverStatus::solved;
            result.thickness = k;
            return result;
        }
        if (outcome == detail::DecompositionSearch::Outcome::aborted) {
            result.refusal_reason = "node cap of " + std::to_string(opt.node_cap) +
                                    " exhausted while searching k = " + std::to_string(k);
            return result;
        }
    }
    result.status = SolverStatus::exceeds_k_max;
    return result;
}

struct BiplanarSearchResult {
    enum class Status { found, none, refused };
    Status status = Status::refused;
    std::array<EdgeList, 2> witness;  // valid when found
    SolverStats stats;
    std::string refusal_reason;
};

// Specialized k = 2 search: a biplanar decomposition if one exists, a
// definitive "none", or a refusal when the budget runs out.
inline BiplanarSearchResult find_biplanar(const Graph& g,
                                          const SolverOptions& opt = SolverOptions{}) {
    BiplanarSearchResult result;
    if (auto refusal = detail::budget_refusal(g, opt)) {
        result.refusal_reason = *refusal;
        return result;
    }
    ++result.stats.planarity_calls;
    if (lr_planar(g)) {
        result.status = BiplanarSearchResult::Status::found;
        result.witness = {g.edges(), EdgeList{}};
        return result;
    }
    detail::DecompositionSearch search(g, 2, opt);
    std::vector<EdgeList> parts;
    const auto outcome = search.run(parts, result.stats);
    switch (outcome) {
        case detail::DecompositionSearch::Outcome::found:
            result.status = BiplanarSearchResult::Status::found;
            result.witness = {parts[0], parts[1]};
            break;
        case detail::DecompositionSearch::Outcome::none:
            result.status = BiplanarSearchResult::Status::none;
            break;
        case detail::DecompositionSearch::Outcome::aborted:
            result.status = BiplanarSearchResult::Status::refused;
            result.refusal_reason = "node cap of " + std::to_string(opt.node_cap) + " exhausted";
            break;
    }
    return result;
}

}  // namespace thicklab

#endif

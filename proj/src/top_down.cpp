#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "local_subgraph.hpp"
#include "spcs/engine.hpp"
#include "spcs/errors.hpp"

namespace spcs {

namespace {

using detail::LocalSubgraph;
using Local = std::uint32_t;

struct Piece {
    Local root;
    std::size_t size;
    bool open;
};

// Top-down refinement state over a local copy of h. A removal peels every node
// whose degree falls below k; the peel is logged so a rejected removal can be
// rolled back in time proportional to what it touched.
class TopDownRefiner {
public:
    TopDownRefiner(const Graph& g, const NodeSet& h, std::uint32_t k, std::size_t t)
        : sub_(g, h), k_(k), t_(t), alive_(sub_.size(), 1), degree_(sub_.size()), alive_count_(sub_.size()),
          owner_(sub_.size()), stamp_(sub_.size(), 0), pool_pos_(sub_.size()) {
        doomed_.assign(sub_.size(), 0);
        for (Local i = 0; i < sub_.size(); ++i) degree_[i] = sub_.degree(i);
        connected_ = is_connected(g.induced(h));
    }

    std::optional<NodeSet> run(RemovalOrder order, Rng& rng) {
        reset_order(order);
        for (;;) {
            const auto v = next_candidate(order, rng);
            if (!v) return std::nullopt;
            auto outcome = try_remove(*v);
            if (outcome.found) return std::move(outcome.found);
            if (outcome.shrunk) reset_order(order);
        }
    }

private:
    struct Outcome {
        std::optional<NodeSet> found;
        bool shrunk = false;
    };

    Outcome try_remove(Local v) {
        removed_.clear();
        if (!cascade(v)) return reject(v);
        std::vector<Piece> pieces = connected_ ? split_from_boundary() : split_everything();

        for (const auto& p : pieces)
            if (p.size == t_) return {sub_.to_global(collect(p, pieces)), false};

        auto best = std::max_element(pieces.begin(), pieces.end(),
                                     [](const Piece& a, const Piece& b) { return a.size < b.size; });
        if (best == pieces.end() || best->size < t_) return reject(v);
        keep_only(*best, pieces);
        return {std::nullopt, true};
    }

    // A removal that leaves no piece of t or more nodes also dooms every later
    // removal whose cascade reaches v: that cascade deletes everything v's
    // did, so what survives sits inside what survived v. The set only shrinks,
    // which keeps that true for the rest of the refinement.
    Outcome reject(Local v) {
        undo();
        doomed_[v] = 1;
        return {};
    }

    // Removes v and everything whose degree drops below k. Returns false as
    // soon as fewer than t nodes remain or a doomed node is reached; the log
    // is left for undo().
    bool cascade(Local v) {
        std::vector<Local>& stack = scratch_;
        stack.assign(1, v);
        while (!stack.empty()) {
            const Local x = stack.back();
            stack.pop_back();
            if (doomed_[x]) return false;
            alive_[x] = 0;
            --alive_count_;
            removed_.push_back(x);
            for (Local u : sub_.neighbors(x)) {
                if (!alive_[u]) continue;
                if (degree_[u]-- == k_) stack.push_back(u);
            }
            if (alive_count_ < t_) return false;
        }
        return true;
    }

    void undo() {
        for (auto it = removed_.rbegin(); it != removed_.rend(); ++it) {
            const Local x = *it;
            for (Local u : sub_.neighbors(x))
                if (alive_[u]) ++degree_[u];
            alive_[x] = 1;
            ++alive_count_;
        }
        removed_.clear();
    }

    // Every component left after the cascade touches a removed node, because
    // the set was connected beforehand. Searches start from those boundary
    // nodes in lock step and merge when they meet; once at most one group is
    // still growing, the sizes of all pieces are known.
    std::vector<Piece> split_from_boundary() {
        ++epoch_;
        seeds_.clear();
        for (Local x : removed_)
            for (Local u : sub_.neighbors(x))
                if (alive_[u] && stamp_[u] != epoch_) {
                    stamp_[u] = epoch_;
                    owner_[u] = static_cast<Local>(seeds_.size());
                    seeds_.push_back(u);
                }
        const auto s = seeds_.size();
        if (s <= 1) return {{0, alive_count_, true}};

        parent_.resize(s);
        std::iota(parent_.begin(), parent_.end(), Local{0});
        group_size_.assign(s, 1);
        active_.assign(s, 1);
        visited_.resize(s);
        head_.assign(s, 0);
        for (std::size_t i = 0; i < s; ++i) visited_[i].assign(1, seeds_[i]);

        std::size_t open = s;
        std::vector<Local> running(s);
        std::iota(running.begin(), running.end(), Local{0});
        while (open > 1) {
            std::size_t kept = 0;
            for (std::size_t r = 0; r < running.size() && open > 1; ++r) {
                const Local a = running[r];
                auto& q = visited_[a];
                if (head_[a] == q.size()) continue;
                const Local x = q[head_[a]++];
                for (Local u : sub_.neighbors(x)) {
                    if (!alive_[u]) continue;
                    if (stamp_[u] != epoch_) {
                        stamp_[u] = epoch_;
                        owner_[u] = a;
                        q.push_back(u);
                        ++group_size_[find(a)];
                    } else if (unite(a, owner_[u])) {
                        --open;
                    }
                }
                if (head_[a] == q.size()) {
                    const Local root = find(a);
                    if (--active_[root] == 0) --open;
                } else {
                    running[kept++] = a;
                }
            }
            if (open <= 1) break;
            running.resize(kept);
        }

        std::vector<Piece> pieces;
        std::size_t finished_total = 0;
        bool has_open = false;
        for (Local i = 0; i < s; ++i) {
            if (find(i) != i) continue;
            if (active_[i] == 0) {
                pieces.push_back({i, group_size_[i], false});
                finished_total += group_size_[i];
            } else {
                has_open = true;
            }
        }
        if (has_open) pieces.push_back({0, alive_count_ - finished_total, true});
        return pieces;
    }

    // Plain component search over all alive nodes, for an initially
    // disconnected set.
    std::vector<Piece> split_everything() {
        ++epoch_;
        seeds_.clear();
        visited_.clear();
        std::vector<Piece> pieces;
        for (Local i = 0; i < sub_.size(); ++i) {
            if (!alive_[i] || stamp_[i] == epoch_) continue;
            const auto id = static_cast<Local>(seeds_.size());
            seeds_.push_back(i);
            visited_.emplace_back(1, i);
            stamp_[i] = epoch_;
            owner_[i] = id;
            auto& q = visited_.back();
            for (std::size_t head = 0; head < q.size(); ++head)
                for (Local u : sub_.neighbors(q[head]))
                    if (alive_[u] && stamp_[u] != epoch_) {
                        stamp_[u] = epoch_;
                        owner_[u] = id;
                        q.push_back(u);
                    }
            pieces.push_back({id, q.size(), false});
        }
        parent_.resize(seeds_.size());
        std::iota(parent_.begin(), parent_.end(), Local{0});
        return pieces;
    }

    bool in_finished(Local x, const std::vector<Piece>& pieces) {
        if (stamp_[x] != epoch_ || owner_[x] >= parent_.size()) return false;
        const Local root = find(owner_[x]);
        return std::any_of(pieces.begin(), pieces.end(), [&](const Piece& p) { return !p.open && p.root == root; });
    }

    std::vector<Local> collect(const Piece& piece, const std::vector<Piece>& pieces) {
        std::vector<Local> out;
        if (piece.open) {
            if (pieces.size() == 1) {
                for (Local i = 0; i < sub_.size(); ++i)
                    if (alive_[i]) out.push_back(i);
                return out;
            }
            for (Local i = 0; i < sub_.size(); ++i)
                if (alive_[i] && !in_finished(i, pieces)) out.push_back(i);
        } else {
            for (Local i = 0; i < seeds_.size(); ++i)
                if (find(i) == piece.root) out.insert(out.end(), visited_[i].begin(), visited_[i].end());
        }
        return out;
    }

    // Commits the last removal and discards every piece but `keep`.
    void keep_only(const Piece& keep, const std::vector<Piece>& pieces) {
        if (keep.open) {
            for (const auto& p : pieces)
                if (!p.open)
                    for (Local x : collect(p, pieces)) kill_isolated(x);
        } else {
            std::vector<std::uint8_t> stay(sub_.size(), 0);
            for (Local x : collect(keep, pieces)) stay[x] = 1;
            for (Local i = 0; i < sub_.size(); ++i)
                if (alive_[i] && !stay[i]) kill_isolated(i);
        }
        connected_ = true;
    }

    // Dropping a whole piece: its neighbours are all dropped too, so degrees
    // of the survivors are unaffected.
    void kill_isolated(Local x) {
        alive_[x] = 0;
        --alive_count_;
        removed_.push_back(x);
    }

    Local find(Local x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Merges the groups of a and b; true when two still-growing groups merged.
    bool unite(Local a, Local b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        const bool both_open = active_[a] > 0 && active_[b] > 0;
        if (group_size_[a] < group_size_[b]) std::swap(a, b);
        parent_[b] = a;
        group_size_[a] += group_size_[b];
        active_[a] += active_[b];
        return both_open;
    }

    // Candidate order. Random: draw without replacement from the untried
    // prefix of the pool, which matches a fresh shuffle after every shrink.
    // Lowest degree first: alive nodes sorted by current degree, then id.
    void reset_order(RemovalOrder order) {
        if (order == RemovalOrder::random) {
            if (pool_.empty() && removed_.empty()) {
                for (Local i = 0; i < sub_.size(); ++i) {
                    pool_pos_[i] = static_cast<Local>(pool_.size());
                    pool_.push_back(i);
                }
            } else {
                for (Local x : removed_) {
                    const Local p = pool_pos_[x];
                    const Local last = pool_.back();
                    pool_[p] = last;
                    pool_pos_[last] = p;
                    pool_.pop_back();
                }
            }
            untried_ = pool_.size();
        } else {
            pool_.clear();
            for (Local i = 0; i < sub_.size(); ++i)
                if (alive_[i]) pool_.push_back(i);
            std::sort(pool_.begin(), pool_.end(), [&](Local a, Local b) {
                return std::tie(degree_[a], sub_.global[a]) < std::tie(degree_[b], sub_.global[b]);
            });
            untried_ = 0;
        }
        removed_.clear();
    }

    std::optional<Local> next_candidate(RemovalOrder order, Rng& rng) {
        if (order == RemovalOrder::random) {
            if (untried_ == 0) return std::nullopt;
            std::uniform_int_distribution<std::size_t> pick(0, untried_ - 1);
            const std::size_t i = pick(rng);
            const Local v = pool_[i];
            const Local w = pool_[--untried_];
            pool_[i] = w;
            pool_pos_[w] = static_cast<Local>(i);
            pool_[untried_] = v;
            pool_pos_[v] = static_cast<Local>(untried_);
            return v;
        }
        if (untried_ == pool_.size()) return std::nullopt;
        return pool_[untried_++];
    }

    LocalSubgraph sub_;
    std::uint32_t k_;
    std::size_t t_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::uint32_t> degree_;
    std::size_t alive_count_;
    bool connected_ = true;

    std::vector<Local> removed_;
    std::vector<Local> scratch_;
    std::vector<std::uint8_t> doomed_;

    // Boundary search state, valid for the current epoch.
    std::vector<Local> owner_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<Local> seeds_;
    std::vector<Local> parent_;
    std::vector<std::size_t> group_size_;
    std::vector<std::uint32_t> active_;
    std::vector<std::vector<Local>> visited_;
    std::vector<std::size_t> head_;

    std::vector<Local> pool_;
    std::vector<Local> pool_pos_;
    std::size_t untried_ = 0;
};

}  // namespace

std::optional<NodeSet> size_refinement_td(const Graph& g, const NodeSet& h, std::uint32_t k, std::size_t t,
                                          RemovalOrder order, Rng& rng) {
    if (h.size() <= t) throw ContractError("top-down refinement needs more than t nodes");
    require_k_core(g, h, k);
    TopDownRefiner refiner(g, h, k, t);
    return refiner.run(order, rng);
}

}  // namespace spcs

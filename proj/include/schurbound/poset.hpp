#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace schurbound {

/// Chain enumeration refuses to return more than this many chains unless the
/// caller raises the limit explicitly. Counts explode combinatorially, so
/// failing loudly beats silent truncation.
inline constexpr std::uint64_t kDefaultChainLimit = 1'000'000;

/// A saturated chain, stored top-down: elements[k] covers elements[k+1].
/// A single element is the trivial chain of length 0.
struct Chain {
    std::vector<Partition> elements;

    int length() const noexcept { return static_cast<int>(elements.size()) - 1; }

    friend bool operator==(const Chain&, const Chain&) = default;
};

/// The interval [bottom, top] of a dominance order Gamma(n, r), materialized
/// as its cover-relation DAG with longest-path annotations. Intervals are
/// order-convex, so covers inside the interval are covers of the full poset.
/// Immutable after build; all queries are pure.
class HasseInterval {
public:
    /// Explores downward from `top` via the constructive cover generation,
    /// keeping nodes that still dominate `bottom`.
    static HasseInterval build(Partition top, Partition bottom, int rank) {
        if (!dominates(top, bottom))
            throw NotComparable("'" + schurbound::to_string(top) + "' does not dominate '" +
                                schurbound::to_string(bottom) + "'");
        if (top.part(0) > rank)
            throw RankExceeded("top has part " + std::to_string(top.part(0)) + " > rank " +
                               std::to_string(rank));

        HasseInterval iv;
        iv.top_ = std::move(top);
        iv.bottom_ = std::move(bottom);
        iv.rank_ = rank;

        std::vector<Partition> stack{iv.top_};
        iv.children_.emplace(iv.top_, std::vector<Partition>{});
        while (!stack.empty()) {
            Partition node = std::move(stack.back());
            stack.pop_back();
            std::vector<Partition> kids;
            for (Partition& child : down_covers(node, rank)) {
                if (!dominates(child, iv.bottom_)) continue;
                if (iv.children_.find(child) == iv.children_.end()) {
                    iv.children_.emplace(child, std::vector<Partition>{});
                    stack.push_back(child);
                }
                kids.push_back(std::move(child));
            }
            iv.children_[node] = std::move(kids);  // already in listing order
        }

        for (const auto& [node, kids] : iv.children_) iv.nodes_.push_back(node);
        // map iteration is RevLexLess order = a topological order of the DAG
        iv.longest_from_top_[iv.top_] = 0;
        for (const Partition& node : iv.nodes_) {
            const int base = iv.longest_from_top_.at(node);
            for (const Partition& child : iv.children_.at(node)) {
                auto [it, inserted] = iv.longest_from_top_.emplace(child, base + 1);
                if (!inserted && it->second < base + 1) it->second = base + 1;
            }
        }
        iv.longest_to_bottom_[iv.bottom_] = 0;
        for (auto rit = iv.nodes_.rbegin(); rit != iv.nodes_.rend(); ++rit) {
            if (*rit == iv.bottom_) continue;
            int best = -1;
            for (const Partition& child : iv.children_.at(*rit))
                best = std::max(best, iv.longest_to_bottom_.at(child));
            iv.longest_to_bottom_[*rit] = best + 1;  // every non-bottom node has a child
        }
        return iv;
    }

    const Partition& top() const noexcept { return top_; }
    const Partition& bottom() const noexcept { return bottom_; }
    int rank() const noexcept { return rank_; }

    /// Interval members in canonical listing order.
    const std::vector<Partition>& nodes() const noexcept { return nodes_; }

    std::size_t node_count() const noexcept { return nodes_.size(); }

    std::size_t edge_count() const noexcept {
        std::size_t n = 0;
        for (const auto& [node, kids] : children_) n += kids.size();
        return n;
    }

    /// Cover pairs (parent, child) grouped by parent in listing order.
    std::vector<std::pair<Partition, Partition>> edges() const {
        std::vector<std::pair<Partition, Partition>> out;
        for (const Partition& node : nodes_)
            for (const Partition& child : children_.at(node)) out.emplace_back(node, child);
        return out;
    }

    const std::vector<Partition>& children(const Partition& node) const {
        return children_.at(node);
    }

    /// Length of the longest chain from top() down to `node`.
    int longest_from_top(const Partition& node) const { return longest_from_top_.at(node); }

    /// Length of the longest chain from `node` down to bottom().
    int longest_to_bottom(const Partition& node) const { return longest_to_bottom_.at(node); }

    /// l(top, bottom): length of the longest saturated chain through the interval.
    int longest_chain_length() const { return longest_from_top_.at(bottom_); }

    /// All saturated chains from top to bottom, children explored in listing
    /// order. Throws LimitExceeded once more than `limit` chains appear.
    std::vector<Chain> maximal_chains(std::uint64_t limit = kDefaultChainLimit) const {
        std::vector<Chain> out;
        std::vector<Partition> path{top_};
        walk(top_, path, out, limit, nullptr);
        return out;
    }

    /// Exactly the chains realizing longest_chain_length(), found by walking
    /// only edges that lie on some longest top-to-bottom path.
    std::vector<Chain> longest_chains(std::uint64_t limit = kDefaultChainLimit) const {
        const int total = longest_chain_length();
        std::vector<Chain> out;
        std::vector<Partition> path{top_};
        walk(top_, path, out, limit, &total);
        return out;
    }

private:
    HasseInterval() = default;

    void walk(const Partition& node, std::vector<Partition>& path, std::vector<Chain>& out,
              std::uint64_t limit, const int* longest_only) const {
        if (node == bottom_) {
            if (out.size() >= limit)
                throw LimitExceeded("chain enumeration exceeded limit of " +
                                        std::to_string(limit),
                                    out.size() + 1);
            out.push_back(Chain{path});
            return;
        }
        for (const Partition& child : children_.at(node)) {
            if (longest_only != nullptr &&
                longest_from_top_.at(node) + 1 + longest_to_bottom_.at(child) != *longest_only)
                continue;
            path.push_back(child);
            walk(child, path, out, limit, longest_only);
            path.pop_back();
        }
    }

    Partition top_;
    Partition bottom_;
    int rank_ = 0;
    std::vector<Partition> nodes_;
    std::map<Partition, std::vector<Partition>, RevLexLess> children_;
    std::map<Partition, int, RevLexLess> longest_from_top_;
    std::map<Partition, int, RevLexLess> longest_to_bottom_;
};

inline HasseInterval build_interval(const Partition& top, const Partition& bottom, int rank) {
    return HasseInterval::build(top, bottom, rank);
}

inline int longest_chain_length(const Partition& top, const Partition& bottom, int rank) {
    return HasseInterval::build(top, bottom, rank).longest_chain_length();
}

inline std::vector<Chain> maximal_chains(const Partition& top, const Partition& bottom,
                                         int rank,
                                         std::uint64_t limit = kDefaultChainLimit) {
    return HasseInterval::build(top, bottom, rank).maximal_chains(limit);
}

inline std::vector<Chain> longest_chains(const Partition& top, const Partition& bottom,
                                         int rank,
                                         std::uint64_t limit = kDefaultChainLimit) {
    return HasseInterval::build(top, bottom, rank).longest_chains(limit);
}

}  // namespace schurbound

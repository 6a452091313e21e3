#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "rng.hpp"

namespace socnet {

using NodeId = uint32_t;

// Grow-only directed simple graph. Dense consecutive node ids, O(1) degree
// lookup and edge-existence check, insertion-ordered neighbor lists.
class DirectedGraph {
public:
    NodeId add_node(uint32_t turn) {
        out_.emplace_back();
        in_.emplace_back();
        birth_turn_.push_back(turn);
        return static_cast<NodeId>(out_.size() - 1);
    }

    // Returns false without mutation on self-loops and duplicates.
    bool add_edge(NodeId src, NodeId dst) {
        check_node(src);
        check_node(dst);
        if (src == dst) return false;
        if (!edge_set_.insert(edge_key(src, dst)).second) return false;
        out_[src].push_back(dst);
        in_[dst].push_back(src);
        ++edge_count_;
        return true;
    }

    bool has_edge(NodeId src, NodeId dst) const {
        return edge_set_.count(edge_key(src, dst)) != 0;
    }

    NodeId random_node(Rng& rng) const {
        if (out_.empty()) throw std::logic_error("random_node on empty graph");
        return static_cast<NodeId>(rng.uniform_index(out_.size()));
    }

    std::span<const NodeId> neighbors_out(NodeId v) const {
        check_node(v);
        return out_[v];
    }
    std::span<const NodeId> neighbors_in(NodeId v) const {
        check_node(v);
        return in_[v];
    }

    uint64_t node_count() const { return out_.size(); }
    uint64_t edge_count() const { return edge_count_; }
    uint64_t out_degree(NodeId v) const { check_node(v); return out_[v].size(); }
    uint64_t in_degree(NodeId v) const { check_node(v); return in_[v].size(); }
    uint32_t birth_turn(NodeId v) const { check_node(v); return birth_turn_[v]; }

private:
    static uint64_t edge_key(NodeId src, NodeId dst) {
        return (static_cast<uint64_t>(src) << 32) | dst;
    }
    void check_node(NodeId v) const {
        if (v >= out_.size()) throw std::out_of_range("unknown node id");
    }

    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
    std::vector<uint32_t> birth_turn_;
    std::unordered_set<uint64_t> edge_set_;
    uint64_t edge_count_ = 0;
};

} // namespace socnet

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ted/tree.hpp"

namespace ted {

// 1-based postorder position; 0 means "none".
using NodeId = int;

enum class PathKind : std::uint8_t { Left, Right, Heavy };

// Postorder-array form of a labeled tree. All per-node arrays are 1-based
// (index 0 unused). Immutable after build_index; safe for concurrent reads.
//
// Node v's descendants occupy the contiguous interval
// [v - size[v] + 1, v]; parents always follow their children (parent[v] > v).
struct TreeIndex {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<NodeId> parent;                 // 0 for the root
    std::vector<std::vector<NodeId>> children;  // ordered
    std::vector<int> size;                      // subtree node count
    std::vector<int> leaves;                    // subtree leaf count
    std::vector<NodeId> heavy_child;  // largest child subtree, leftmost on ties
    std::vector<std::uint64_t> desc_size_sum;  // sum of size[x] over subtree
    std::vector<std::uint64_t> full_count;     // subforests of the full decomposition
    std::vector<std::uint64_t> left_count;     // subforests of the left path decomposition
    std::vector<std::uint64_t> right_count;    // right path decomposition

    // Mirror postorder (children visited right-to-left). The mirrored subtree
    // of v occupies the contiguous rpost interval [rpost[v] - size[v] + 1,
    // rpost[v]]. Used by the right-path and general single-path functions.
    std::vector<int> rpost;
    std::vector<NodeId> node_at_rpost;

    NodeId root() const { return n; }
    bool is_leaf(NodeId v) const { return children[v].empty(); }
    NodeId leftmost_child(NodeId v) const {
        return children[v].empty() ? 0 : children[v].front();
    }
    NodeId rightmost_child(NodeId v) const {
        return children[v].empty() ? 0 : children[v].back();
    }
    // First postorder id of v's subtree (its leftmost leaf).
    NodeId subtree_begin(NodeId v) const { return v - size[v] + 1; }
    bool contains(NodeId v, NodeId x) const {
        return x >= subtree_begin(v) && x <= v;
    }
};

TreeIndex build_index(const Tree& t);

// Root-leaf path from v to a leaf following the child-selection rule of k.
std::vector<NodeId> root_leaf_path(const TreeIndex& ix, NodeId v, PathKind k);

// Roots of the subtrees hanging off `path` inside the subtree of v
// (children of path nodes that are not on the path), in postorder.
std::vector<NodeId> relevant_subtrees(const TreeIndex& ix, NodeId v,
                                      const std::vector<NodeId>& path);

// Test-oracle representation of a subforest: sorted postorder ids.
using Subforest = std::vector<NodeId>;

// Exact set of subforests reachable by repeatedly removing leftmost and
// rightmost root nodes. Oracle; intended for size[v] <= ~14.
std::set<Subforest> enumerate_full_decomposition(const TreeIndex& ix, NodeId v);

// Subforest sequence of the single-path decomposition, in removal order.
// Length equals size[v]. Oracle scale.
std::vector<Subforest> enumerate_relevant_subforests(
    const TreeIndex& ix, NodeId v, const std::vector<NodeId>& path);

}  // namespace ted

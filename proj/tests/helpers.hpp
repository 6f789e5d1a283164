#pragma once

#include <string>
#include <vector>

#include "ted/shapes.hpp"
#include "ted/tree.hpp"
#include "ted/tree_index.hpp"

namespace ted::test {

// Seeded random tree with size in [1, max_n].
inline Tree rand_tree(std::uint64_t seed, int max_n,
                      bool random_labels = true) {
    SplitMix64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
    ShapeSpec spec;
    spec.kind = ShapeKind::Random;
    spec.size = 1 + static_cast<int>(rng.below(max_n));
    spec.seed = rng.next();
    spec.random_labels = random_labels;
    return gen_shape(spec);
}

inline Tree mirror(const Tree& t) {
    Tree m(t.label);
    for (auto it = t.children.rbegin(); it != t.children.rend(); ++it)
        m.children.push_back(mirror(*it));
    return m;
}

// Every root-leaf path of the subtree rooted at v (not only left/right/heavy).
inline std::vector<std::vector<NodeId>> all_root_leaf_paths(
    const TreeIndex& ix, NodeId v) {
    std::vector<std::vector<NodeId>> out;
    std::vector<NodeId> cur;
    auto walk = [&](auto&& self, NodeId x) -> void {
        cur.push_back(x);
        if (ix.is_leaf(x)) out.push_back(cur);
        for (NodeId c : ix.children[x]) self(self, c);
        cur.pop_back();
    };
    walk(walk, v);
    return out;
}

// Rebuilds the subtree rooted at v as a standalone Tree.
inline Tree subtree_as_tree(const TreeIndex& ix, NodeId v) {
    Tree t(ix.labels[v]);
    for (NodeId c : ix.children[v]) t.children.push_back(subtree_as_tree(ix, c));
    return t;
}

// Sum of subtree sizes over the recursive path decomposition (the explicit
// counting route for the left/right subforest-count recurrences).
inline std::uint64_t decomposition_size_sum(const TreeIndex& ix, NodeId v,
                                            PathKind k) {
    std::uint64_t total = ix.size[v];
    const auto path = root_leaf_path(ix, v, k);
    for (NodeId x : relevant_subtrees(ix, v, path))
        total += decomposition_size_sum(ix, x, k);
    return total;
}

}  // namespace ted::test

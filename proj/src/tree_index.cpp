#include "ted/tree_index.hpp"

#include <algorithm>
#include <cassert>

namespace ted {

TreeIndex build_index(const Tree& t) {
    TreeIndex ix;
    const int n = static_cast<int>(t.node_count());
    ix.n = n;
    ix.labels.assign(n + 1, {});
    ix.parent.assign(n + 1, 0);
    ix.children.assign(n + 1, {});
    ix.size.assign(n + 1, 0);
    ix.leaves.assign(n + 1, 0);
    ix.heavy_child.assign(n + 1, 0);
    ix.desc_size_sum.assign(n + 1, 0);
    ix.full_count.assign(n + 1, 0);
    ix.left_count.assign(n + 1, 0);
    ix.right_count.assign(n + 1, 0);
    ix.rpost.assign(n + 1, 0);
    ix.node_at_rpost.assign(n + 1, 0);

    // Iterative postorder id assignment.
    struct Frame {
        const Tree* node;
        std::size_t next_child = 0;
        std::vector<NodeId> child_ids;
    };
    std::vector<Frame> stack;
    stack.push_back({&t});
    int next_id = 0;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_child < f.node->children.size()) {
            stack.push_back({&f.node->children[f.next_child]});
            ++f.next_child;
            continue;
        }
        NodeId v = ++next_id;
        ix.labels[v] = f.node->label;
        ix.children[v] = f.child_ids;
        int sz = 1, lv = 0;
        NodeId heavy = 0;
        for (NodeId c : f.child_ids) {
            ix.parent[c] = v;
            sz += ix.size[c];
            lv += ix.leaves[c];
            if (heavy == 0 || ix.size[c] > ix.size[heavy]) heavy = c;
        }
        ix.size[v] = sz;
        ix.leaves[v] = f.child_ids.empty() ? 1 : lv;
        ix.heavy_child[v] = heavy;
        // left/right path subforest counts (linear-time recurrences)
        if (f.child_ids.empty()) {
            ix.left_count[v] = 1;
            ix.right_count[v] = 1;
        } else {
            NodeId first = f.child_ids.front();
            NodeId last = f.child_ids.back();
            std::uint64_t lc = sz, rc = sz;
            for (NodeId c : f.child_ids) {
                lc += (c == first) ? ix.left_count[c] - ix.size[c]
                                   : ix.left_count[c];
                rc += (c == last) ? ix.right_count[c] - ix.size[c]
                                  : ix.right_count[c];
            }
            ix.left_count[v] = lc;
            ix.right_count[v] = rc;
        }
        stack.pop_back();
        if (!stack.empty()) stack.back().child_ids.push_back(v);
    }
    assert(next_id == n);

    // desc_size_sum via prefix sums over the postorder array (descendant
    // intervals are contiguous), then the full decomposition count.
    std::vector<std::uint64_t> prefix(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        prefix[v] = prefix[v - 1] + static_cast<std::uint64_t>(ix.size[v]);
    for (int v = 1; v <= n; ++v) {
        ix.desc_size_sum[v] = prefix[v] - prefix[v - ix.size[v]];
        std::uint64_t s = ix.size[v];
        ix.full_count[v] = s * (s + 3) / 2 - ix.desc_size_sum[v];
    }

    // Mirror postorder: traverse children right-to-left.
    struct MFrame {
        NodeId v;
        int next = 0;  // index into children from the right
    };
    std::vector<MFrame> mstack;
    mstack.push_back({ix.root()});
    int next_rpost = 0;
    while (!mstack.empty()) {
        MFrame& f = mstack.back();
        const auto& kids = ix.children[f.v];
        if (f.next < static_cast<int>(kids.size())) {
            NodeId c = kids[kids.size() - 1 - f.next];
            ++f.next;
            mstack.push_back({c});
            continue;
        }
        ix.rpost[f.v] = ++next_rpost;
        ix.node_at_rpost[next_rpost] = f.v;
        mstack.pop_back();
    }
    assert(next_rpost == n);
    return ix;
}

std::vector<NodeId> root_leaf_path(const TreeIndex& ix, NodeId v, PathKind k) {
    std::vector<NodeId> path;
    NodeId cur = v;
    for (;;) {
        path.push_back(cur);
        if (ix.is_leaf(cur)) return path;
        switch (k) {
            case PathKind::Left: cur = ix.leftmost_child(cur); break;
            case PathKind::Right: cur = ix.rightmost_child(cur); break;
            case PathKind::Heavy: cur = ix.heavy_child[cur]; break;
        }
    }
}

std::vector<NodeId> relevant_subtrees(const TreeIndex& ix, NodeId v,
                                      const std::vector<NodeId>& path) {
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        NodeId on_path_child = (i + 1 < path.size()) ? path[i + 1] : 0;
        for (NodeId c : ix.children[path[i]])
            if (c != on_path_child) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    (void)v;
    return out;
}

namespace {

// Roots of a subforest: nodes whose parent is outside the id set.
std::vector<NodeId> forest_roots(const TreeIndex& ix, const Subforest& f) {
    std::vector<NodeId> roots;
    for (NodeId x : f) {
        NodeId p = ix.parent[x];
        if (p == 0 || !std::binary_search(f.begin(), f.end(), p))
            roots.push_back(x);
    }
    return roots;
}

Subforest without(const Subforest& f, NodeId x) {
    Subforest g;
    g.reserve(f.size() - 1);
    for (NodeId y : f)
        if (y != x) g.push_back(y);
    return g;
}

}  // namespace

std::set<Subforest> enumerate_full_decomposition(const TreeIndex& ix,
                                                 NodeId v) {
    Subforest whole(ix.size[v]);
    for (int i = 0; i < ix.size[v]; ++i) whole[i] = ix.subtree_begin(v) + i;

    std::set<Subforest> result;
    std::vector<Subforest> work{whole};
    while (!work.empty()) {
        Subforest f = std::move(work.back());
        work.pop_back();
        if (f.empty() || !result.insert(f).second) continue;
        std::vector<NodeId> roots = forest_roots(ix, f);
        NodeId leftmost = roots.front();
        NodeId rightmost = roots.back();
        work.push_back(without(f, leftmost));
        if (rightmost != leftmost) work.push_back(without(f, rightmost));
    }
    return result;
}

std::vector<Subforest> enumerate_relevant_subforests(
    const TreeIndex& ix, NodeId v, const std::vector<NodeId>& path) {
    std::vector<bool> on_path(ix.n + 1, false);
    for (NodeId x : path) on_path[x] = true;

    Subforest cur(ix.size[v]);
    for (int i = 0; i < ix.size[v]; ++i) cur[i] = ix.subtree_begin(v) + i;

    std::vector<Subforest> seq;
    while (!cur.empty()) {
        seq.push_back(cur);
        std::vector<NodeId> roots = forest_roots(ix, cur);
        // Remove the rightmost root while the leftmost root is on the path,
        // otherwise remove the leftmost root.
        cur = on_path[roots.front()] ? without(cur, roots.back())
                                     : without(cur, roots.front());
    }
    return seq;
}

}  // namespace ted

#include "ted/shapes.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ted {

namespace {

constexpr long long kHuge = std::numeric_limits<long long>::max() / 4;

const char kAlphabet[] = {'a', 'b', 'c', 'd', 'e', 'f'};

std::string pick_label(SplitMix64* labels) {
    if (!labels) return "x";
    return std::string(1, kAlphabet[labels->below(sizeof(kAlphabet))]);
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Spine descending into the first (or last) child position with a single
// leaf as the other child; k internal levels, 2k + 1 nodes. `alternate`
// flips the spine side per level.
Tree branch_tree(int k, bool spine_left, bool alternate, SplitMix64* labels) {
    Tree cur(pick_label(labels));
    // built bottom-up; parity keeps the root's spine side == spine_left
    bool left = alternate && k % 2 == 0 ? !spine_left : spine_left;
    for (int level = 0; level < k; ++level) {
        Tree node(pick_label(labels));
        Tree leaf(pick_label(labels));
        if (left) {
            node.children.push_back(std::move(cur));
            node.children.push_back(std::move(leaf));
        } else {
            node.children.push_back(std::move(leaf));
            node.children.push_back(std::move(cur));
        }
        cur = std::move(node);
        if (alternate) left = !left;
    }
    return cur;
}

// Heap-shaped complete binary tree with exactly n nodes.
Tree full_binary_by_size(int n, SplitMix64* labels) {
    std::vector<Tree> heap;
    heap.reserve(n);
    for (int i = 0; i < n; ++i) heap.emplace_back(pick_label(labels));
    for (int i = n - 1; i >= 1; --i) {
        int p = (i - 1) / 2;
        heap[p].children.insert(heap[p].children.begin(), std::move(heap[i]));
    }
    return std::move(heap[0]);
}

Tree full_binary_by_depth(int d, SplitMix64* labels) {
    require(d >= 1, "full-binary depth must be >= 1");
    if (d == 1) return Tree(pick_label(labels));
    Tree node(pick_label(labels));
    node.children.push_back(full_binary_by_depth(d - 1, labels));
    node.children.push_back(full_binary_by_depth(d - 1, labels));
    return node;
}

// Perfect binary skeleton whose leaf slots carry alternating left- and
// right-branch grafts sized to hit n exactly.
Tree mixed_tree(int n, SplitMix64* labels) {
    require(n % 2 == 1, "mixed size must be odd");
    if (n == 1) return Tree(pick_label(labels));
    int d = 1;
    while ((1LL << (d + 1)) - 1 <= n) ++d;  // largest d with 2^d - 1 <= n
    const int leaf_slots = 1 << (d - 1);
    const long long increments = (n + 1 - (1LL << d)) / 2;
    std::vector<int> branch_k(leaf_slots, 0);
    for (long long i = 0; i < increments; ++i)
        ++branch_k[static_cast<int>(i % leaf_slots)];

    int next_slot = 0;
    auto build = [&](auto&& self, int level) -> Tree {
        if (level == d - 1) {
            int slot = next_slot++;
            return branch_tree(branch_k[slot], slot % 2 == 0, false, labels);
        }
        Tree node(pick_label(labels));
        node.children.push_back(self(self, level + 1));
        node.children.push_back(self(self, level + 1));
        return node;
    };
    Tree t = build(build, 0);
    assert(static_cast<int>(t.node_count()) == n);
    return t;
}

// Max node count of a subtree with `levels` levels available (its root
// included), saturated.
long long subtree_capacity(int levels, int fanout) {
    long long total = 0, layer = 1;
    for (int i = 0; i < levels; ++i) {
        total += layer;
        if (total >= kHuge) return kHuge;
        if (layer >= kHuge / fanout)
            layer = kHuge;
        else
            layer *= fanout;
    }
    return total;
}

// Seeded growth to exactly `budget` nodes; `levels` counts the levels still
// available including the current node.
Tree random_tree(int budget, int levels, const ShapeSpec& spec,
                 SplitMix64& rng, SplitMix64* labels) {
    Tree node(pick_label(labels));
    const int rem = budget - 1;
    if (rem == 0) return node;

    const long long child_cap = subtree_capacity(levels - 1, spec.max_fanout);
    const int k_min = static_cast<int>((rem + child_cap - 1) / child_cap);
    const int k_max = static_cast<int>(
        std::min<long long>(spec.max_fanout, rem));
    const int k = k_min + static_cast<int>(rng.below(k_max - k_min + 1));

    std::vector<int> parts(k, 1);
    for (int extra = rem - k; extra > 0; --extra) {
        int i = static_cast<int>(rng.below(k));
        while (parts[i] >= child_cap) i = (i + 1) % k;
        ++parts[i];
    }
    node.children.reserve(k);
    for (int i = 0; i < k; ++i)
        node.children.push_back(
            random_tree(parts[i], levels - 1, spec, rng, labels));
    return node;
}

}  // namespace

Tree gen_shape(const ShapeSpec& spec) {
    require(spec.depth.has_value() || spec.size >= 1,
            "size parameter must be >= 1");
    SplitMix64 label_rng(spec.seed ^ 0x5851F42D4C957F2DULL);
    SplitMix64* labels = spec.random_labels ? &label_rng : nullptr;

    switch (spec.kind) {
        case ShapeKind::LeftBranch:
            require(spec.size % 2 == 1, "left-branch size must be odd");
            return branch_tree((spec.size - 1) / 2, true, false, labels);
        case ShapeKind::RightBranch:
            require(spec.size % 2 == 1, "right-branch size must be odd");
            return branch_tree((spec.size - 1) / 2, false, false, labels);
        case ShapeKind::ZigZag:
            require(spec.size % 2 == 1, "zigzag size must be odd");
            return branch_tree((spec.size - 1) / 2, true, true, labels);
        case ShapeKind::FullBinary:
            if (spec.depth) return full_binary_by_depth(*spec.depth, labels);
            return full_binary_by_size(spec.size, labels);
        case ShapeKind::Mixed:
            return mixed_tree(spec.size, labels);
        case ShapeKind::Random: {
            require(spec.max_depth >= 1 && spec.max_fanout >= 1,
                    "random caps must be positive");
            require(spec.size <=
                        subtree_capacity(spec.max_depth, spec.max_fanout),
                    "random size does not fit within depth/fanout caps");
            SplitMix64 rng(spec.seed);
            return random_tree(spec.size, spec.max_depth, spec, rng, labels);
        }
    }
    throw std::invalid_argument("unknown shape kind");
}

}  // namespace ted

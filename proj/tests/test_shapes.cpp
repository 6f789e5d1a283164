#include <doctest.h>

#include "helpers.hpp"
#include "ted/shapes.hpp"
#include "ted/tree_index.hpp"

using namespace ted;

TEST_CASE("left branch construction") {
    CHECK(serialize_bracket(gen_shape({ShapeKind::LeftBranch, 3})) ==
          "{x{x}{x}}");
    CHECK(serialize_bracket(gen_shape({ShapeKind::RightBranch, 3})) ==
          "{x{x}{x}}");
    CHECK(serialize_bracket(gen_shape({ShapeKind::LeftBranch, 5})) ==
          "{x{x{x}{x}}{x}}");
    CHECK(serialize_bracket(gen_shape({ShapeKind::RightBranch, 5})) ==
          "{x{x}{x{x}{x}}}");

    for (int n : {1, 21, 101}) {
        TreeIndex ix = build_index(gen_shape({ShapeKind::LeftBranch, n}));
        CHECK(ix.n == n);
        CHECK(ix.leaves[ix.root()] == (n + 1) / 2);
    }
}

TEST_CASE("branch trees satisfy the degenerate-shape identities") {
    TreeIndex lb = build_index(gen_shape({ShapeKind::LeftBranch, 21}));
    for (NodeId v = 1; v <= lb.n; ++v) {
        if (lb.is_leaf(v)) continue;
        auto off = [&](PathKind k) {
            return relevant_subtrees(lb, v, root_leaf_path(lb, v, k)).size();
        };
        CHECK(off(PathKind::Left) == static_cast<std::size_t>(lb.size[v] - 1) / 2);
        CHECK(off(PathKind::Heavy) ==
              static_cast<std::size_t>(lb.size[v] - 1) / 2);
        CHECK(off(PathKind::Right) == 1);
    }
    TreeIndex rb = build_index(gen_shape({ShapeKind::RightBranch, 21}));
    for (NodeId v = 1; v <= rb.n; ++v) {
        if (rb.is_leaf(v)) continue;
        auto off = [&](PathKind k) {
            return relevant_subtrees(rb, v, root_leaf_path(rb, v, k)).size();
        };
        CHECK(off(PathKind::Right) ==
              static_cast<std::size_t>(rb.size[v] - 1) / 2);
        CHECK(off(PathKind::Heavy) ==
              static_cast<std::size_t>(rb.size[v] - 1) / 2);
        CHECK(off(PathKind::Left) == 1);
    }
}

TEST_CASE("zigzag, full binary and mixed sizes are exact") {
    for (int n : {1, 3, 5, 21, 101, 501}) {
        CHECK(gen_shape({ShapeKind::ZigZag, n}).node_count() ==
              static_cast<std::size_t>(n));
        CHECK(gen_shape({ShapeKind::Mixed, n}).node_count() ==
              static_cast<std::size_t>(n));
    }
    for (int n = 1; n <= 40; ++n)
        CHECK(gen_shape({ShapeKind::FullBinary, n}).node_count() ==
              static_cast<std::size_t>(n));
    ShapeSpec by_depth{ShapeKind::FullBinary, 0};
    by_depth.depth = 5;
    CHECK(gen_shape(by_depth).node_count() == 31);

    CHECK_THROWS_AS(gen_shape({ShapeKind::LeftBranch, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(gen_shape({ShapeKind::Mixed, 10}), std::invalid_argument);
    CHECK_THROWS_AS(gen_shape({ShapeKind::ZigZag, 0}), std::invalid_argument);
}

TEST_CASE("zigzag alternates its spine side") {
    Tree zz = gen_shape({ShapeKind::ZigZag, 7});
    // root spine child sits on the left, next level on the right, ...
    const Tree* cur = &zz;
    bool expect_left = true;
    while (!cur->children.empty()) {
        REQUIRE(cur->children.size() == 2);
        const Tree& next =
            expect_left ? cur->children.front() : cur->children.back();
        const Tree& leaf =
            expect_left ? cur->children.back() : cur->children.front();
        CHECK(leaf.children.empty());
        cur = &next;
        expect_left = !expect_left;
    }
}

TEST_CASE("random trees respect caps and reproduce from seeds") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        ShapeSpec spec{ShapeKind::Random, 64};
        spec.seed = seed;
        spec.max_depth = 6;
        spec.max_fanout = 4;
        spec.random_labels = true;
        Tree t = gen_shape(spec);
        CHECK(t.node_count() == 64);
        CHECK(gen_shape(spec) == t);

        TreeIndex ix = build_index(t);
        // depth: count nodes on the longest root-leaf chain
        int max_depth = 0;
        for (const auto& path : test::all_root_leaf_paths(ix, ix.root()))
            max_depth = std::max(max_depth, static_cast<int>(path.size()));
        CHECK(max_depth <= spec.max_depth);
        for (NodeId v = 1; v <= ix.n; ++v)
            CHECK(static_cast<int>(ix.children[v].size()) <= spec.max_fanout);
    }
    CHECK_THROWS_AS(gen_shape({ShapeKind::Random, 100, {}, 0, 2, 2}),
                    std::invalid_argument);
}

TEST_CASE("default labels are uniform, random labels draw from the alphabet") {
    Tree plain = gen_shape({ShapeKind::Mixed, 21});
    TreeIndex ix = build_index(plain);
    for (NodeId v = 1; v <= ix.n; ++v) CHECK(ix.labels[v] == "x");

    ShapeSpec spec{ShapeKind::Random, 40};
    spec.seed = 3;
    spec.random_labels = true;
    TreeIndex rix = build_index(gen_shape(spec));
    bool non_x = false;
    for (NodeId v = 1; v <= rix.n; ++v) {
        CHECK(rix.labels[v].size() == 1);
        if (rix.labels[v] != "x") non_x = true;
    }
    CHECK(non_x);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "ted/tree.hpp"
#include "ted/tree_index.hpp"

using namespace ted;

TEST_CASE("parse_bracket basics") {
    Tree single = parse_bracket("{a}");
    CHECK(single.label == "a");
    CHECK(single.children.empty());

    Tree t = parse_bracket("{a{b}{c}}");
    CHECK(t.label == "a");
    REQUIRE(t.children.size() == 2);
    CHECK(t.children[0].label == "b");
    CHECK(t.children[1].label == "c");
}

TEST_CASE("parse_bracket escapes") {
    Tree t = parse_bracket("{x\\{y}");
    CHECK(t.label == "x{y");
    CHECK(serialize_bracket(t) == "{x\\{y}");
    Tree u = parse_bracket("{a\\\\b{c\\}d}}");
    CHECK(u.label == "a\\b");
    CHECK(u.children[0].label == "c}d");
}

TEST_CASE("parse_bracket errors carry byte offsets") {
    CHECK_THROWS_AS(parse_bracket(""), ParseError);
    CHECK_THROWS_AS(parse_bracket("{a{b}"), ParseError);   // unbalanced
    CHECK_THROWS_AS(parse_bracket("{a}}"), ParseError);    // extra close
    CHECK_THROWS_AS(parse_bracket("{a} x"), ParseError);   // trailing garbage
    CHECK_THROWS_AS(parse_bracket("{}"), ParseError);      // empty label
    CHECK_THROWS_AS(parse_bracket("{a{}{b}}"), ParseError);
    try {
        parse_bracket("{a}junk");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
}

TEST_CASE("serialize round trip") {
    const char* cases[] = {"{a}", "{a{b}{c}}", "{root{x{y{z}}}{w}}"};
    for (const char* c : cases)
        CHECK(serialize_bracket(parse_bracket(c)) == c);

    // labels with every special character survive a round trip
    Tree nasty("{weird}\\label{");
    nasty.children.emplace_back("}}{{");
    Tree back = parse_bracket(serialize_bracket(nasty));
    CHECK(back == nasty);
}

TEST_CASE("round trip on random trees") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Tree t = test::rand_tree(seed, 30);
        CHECK(parse_bracket(serialize_bracket(t)) == t);
    }
}

TEST_CASE("ingest_xml maps element structure") {
    CHECK(serialize_bracket(ingest_xml("<a><b/><c/></a>")) == "{a{b}{c}}");
    CHECK(serialize_bracket(ingest_xml("<a>text</a>")) == "{a}");
    CHECK(serialize_bracket(ingest_xml(
              "<?xml version=\"1.0\"?><!-- hi --><a x=\"1\"><b k='<'/>"
              "<c><![CDATA[<junk>]]></c></a>")) == "{a{b}{c}}");
    CHECK_THROWS_AS(ingest_xml("<a><b></a>"), ParseError);
    CHECK_THROWS_AS(ingest_xml("<a></a><b></b>"), ParseError);
    CHECK_THROWS_AS(ingest_xml("plain text"), ParseError);
}

TEST_CASE("build_index on the 3-node example") {
    TreeIndex ix = build_index(parse_bracket("{a{b}{c}}"));
    REQUIRE(ix.n == 3);
    CHECK(ix.labels[1] == "b");
    CHECK(ix.labels[2] == "c");
    CHECK(ix.labels[3] == "a");
    CHECK(ix.parent[1] == 3);
    CHECK(ix.parent[2] == 3);
    CHECK(ix.parent[3] == 0);
    CHECK(ix.size[3] == 3);
    CHECK(ix.leaves[3] == 2);
    CHECK(ix.heavy_child[3] == 1);  // equal sizes, leftmost wins
    CHECK(ix.full_count[3] == 4);
    CHECK(ix.left_count[3] == 4);
    CHECK(ix.right_count[3] == 4);
}

TEST_CASE("build_index on the 2-node chain") {
    TreeIndex ix = build_index(parse_bracket("{a{b}}"));
    CHECK(ix.full_count[2] == 2);
    CHECK(ix.left_count[2] == 2);
    CHECK(ix.right_count[2] == 2);
    CHECK(ix.full_count[1] == 1);
    CHECK(ix.left_count[1] == 1);
    CHECK(ix.right_count[1] == 1);
}

TEST_CASE("index invariants on random trees") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Tree t = test::rand_tree(seed, 40);
        TreeIndex ix = build_index(t);
        for (NodeId v = 1; v <= ix.n; ++v) {
            if (v != ix.root()) CHECK(ix.parent[v] > v);
            int sz = 1, lv = 0;
            for (NodeId c : ix.children[v]) {
                sz += ix.size[c];
                lv += ix.leaves[c];
                CHECK(ix.parent[c] == v);
                // children occupy the contiguous interval before v
                CHECK(c < v);
                CHECK(ix.subtree_begin(c) >= ix.subtree_begin(v));
            }
            CHECK(ix.size[v] == sz);
            CHECK(ix.leaves[v] == (ix.is_leaf(v) ? 1 : lv));
            if (!ix.is_leaf(v)) {
                NodeId h = ix.heavy_child[v];
                for (NodeId c : ix.children[v]) {
                    CHECK(ix.size[c] <= ix.size[h]);
                    if (ix.size[c] == ix.size[h]) CHECK(h <= c);
                }
            }
            std::uint64_t dss = 0;
            for (NodeId x = ix.subtree_begin(v); x <= v; ++x) dss += ix.size[x];
            CHECK(ix.desc_size_sum[v] == dss);
        }
    }
}

TEST_CASE("root_leaf_path selection rules") {
    TreeIndex chain = build_index(parse_bracket("{a{b}}"));
    for (PathKind k : {PathKind::Left, PathKind::Right, PathKind::Heavy})
        CHECK(root_leaf_path(chain, 2, k) == std::vector<NodeId>{2, 1});

    TreeIndex ix = build_index(parse_bracket("{a{b}{c}}"));
    CHECK(root_leaf_path(ix, 3, PathKind::Left) == std::vector<NodeId>{3, 1});
    CHECK(root_leaf_path(ix, 3, PathKind::Right) == std::vector<NodeId>{3, 2});
    CHECK(root_leaf_path(ix, 3, PathKind::Heavy) == std::vector<NodeId>{3, 1});
}

TEST_CASE("relevant_subtrees") {
    TreeIndex ix = build_index(parse_bracket("{a{b}{c}}"));
    CHECK(relevant_subtrees(ix, 3, {3, 1}) == std::vector<NodeId>{2});

    TreeIndex chain = build_index(parse_bracket("{a{b}}"));
    CHECK(relevant_subtrees(chain, 2, {2, 1}).empty());

    // 5-node left branch: the left path leaves (n-1)/2 = 2 subtrees behind
    ShapeSpec lb{ShapeKind::LeftBranch, 5};
    TreeIndex lbix = build_index(gen_shape(lb));
    auto left = root_leaf_path(lbix, lbix.root(), PathKind::Left);
    CHECK(relevant_subtrees(lbix, lbix.root(), left).size() == 2);
    auto right = root_leaf_path(lbix, lbix.root(), PathKind::Right);
    CHECK(relevant_subtrees(lbix, lbix.root(), right).size() == 1);
}

TEST_CASE("full decomposition enumeration matches the closed form") {
    TreeIndex ix = build_index(parse_bracket("{a{b}{c}}"));
    auto dec = enumerate_full_decomposition(ix, 3);
    CHECK(dec.size() == 4);
    CHECK(dec.count({1, 2, 3}) == 1);
    CHECK(dec.count({1, 2}) == 1);
    CHECK(dec.count({1}) == 1);
    CHECK(dec.count({2}) == 1);

    TreeIndex single = build_index(parse_bracket("{a}"));
    CHECK(enumerate_full_decomposition(single, 1) ==
          std::set<Subforest>{{1}});

    // 4-node chain: 4*7/2 - (4+3+2+1) = 4
    TreeIndex c4 = build_index(parse_bracket("{a{b{c{d}}}}"));
    CHECK(c4.full_count[4] == 4);
    CHECK(enumerate_full_decomposition(c4, 4).size() == 4);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Tree t = test::rand_tree(seed, 12);
        TreeIndex rix = build_index(t);
        for (NodeId v = 1; v <= rix.n; ++v)
            CHECK(enumerate_full_decomposition(rix, v).size() ==
                  rix.full_count[v]);
    }
}

TEST_CASE("relevant subforest sequences") {
    TreeIndex ix = build_index(parse_bracket("{a{b}{c}}"));
    auto seq = enumerate_relevant_subforests(ix, 3, {3, 2});
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == Subforest{1, 2, 3});
    CHECK(seq[1] == Subforest{1, 2});
    CHECK(seq[2] == Subforest{2});

    TreeIndex single = build_index(parse_bracket("{a}"));
    CHECK(enumerate_relevant_subforests(single, 1, {1}).size() == 1);
}

TEST_CASE("subforest counts against enumeration oracles") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Tree t = test::rand_tree(seed, 12);
        TreeIndex ix = build_index(t);
        for (NodeId v = 1; v <= ix.n; ++v) {
            auto full = enumerate_full_decomposition(ix, v);
            for (const auto& path : test::all_root_leaf_paths(ix, v)) {
                auto seq = enumerate_relevant_subforests(ix, v, path);
                CHECK(seq.size() == static_cast<std::size_t>(ix.size[v]));
                // every relevant subforest appears in the full decomposition
                for (const auto& f : seq) CHECK(full.count(f) == 1);
            }
            // left/right counts equal the sum of subtree sizes over the
            // recursive decomposition
            CHECK(ix.left_count[v] ==
                  test::decomposition_size_sum(ix, v, PathKind::Left));
            CHECK(ix.right_count[v] ==
                  test::decomposition_size_sum(ix, v, PathKind::Right));
        }
    }
}

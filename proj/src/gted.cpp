#include "ted/gted.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <unordered_map>

namespace ted {

namespace {

// ---------------------------------------------------------------------------
// Per-run cost resolution. Labels are interned once so the hot loops only do
// array lookups; the CostModel functions are consulted once per node and
// label pair.

struct RunCosts {
    std::vector<double> del_f, ins_f, del_g, ins_g;  // per node, 1-based
    std::vector<int> lab_f, lab_g;                   // interned label ids
    std::vector<double> ren;    // ren[a * nlab + b], a renamed to b
    std::vector<double> ren_t;  // ren_t[a * nlab + b] == ren[b * nlab + a]
    int nlab = 0;
};

RunCosts resolve_costs(const TreeIndex& F, const TreeIndex& G,
                       const CostModel& c) {
    RunCosts rc;
    std::unordered_map<std::string, int> ids;
    std::vector<const std::string*> by_id;
    auto intern = [&](const std::string& s) {
        auto [it, fresh] = ids.emplace(s, static_cast<int>(by_id.size()));
        if (fresh) by_id.push_back(&it->first);
        return it->second;
    };
    rc.lab_f.assign(F.n + 1, 0);
    rc.lab_g.assign(G.n + 1, 0);
    rc.del_f.assign(F.n + 1, 0.0);
    rc.ins_f.assign(F.n + 1, 0.0);
    rc.del_g.assign(G.n + 1, 0.0);
    rc.ins_g.assign(G.n + 1, 0.0);
    for (NodeId v = 1; v <= F.n; ++v) {
        rc.lab_f[v] = intern(F.labels[v]);
        rc.del_f[v] = c.del(F.labels[v]);
        rc.ins_f[v] = c.ins(F.labels[v]);
    }
    for (NodeId w = 1; w <= G.n; ++w) {
        rc.lab_g[w] = intern(G.labels[w]);
        rc.del_g[w] = c.del(G.labels[w]);
        rc.ins_g[w] = c.ins(G.labels[w]);
    }
    rc.nlab = static_cast<int>(by_id.size());
    rc.ren.assign(static_cast<std::size_t>(rc.nlab) * rc.nlab, 0.0);
    rc.ren_t.assign(rc.ren.size(), 0.0);
    for (int a = 0; a < rc.nlab; ++a)
        for (int b = 0; b < rc.nlab; ++b) {
            const std::size_t i = static_cast<std::size_t>(a) * rc.nlab + b;
            rc.ren[i] = c.ren(*by_id[a], *by_id[b]);
            rc.ren_t[i] = c.ren(*by_id[b], *by_id[a]);
        }
    return rc;
}

// One operand of a single-path call. Deletion applies to the decomposed
// operand's nodes, insertion to the other side's nodes; both arrays are
// already oriented for the call.
struct OperandView {
    const TreeIndex* ix;
    const double* del;
    const double* ins;
    const int* lab;
};

struct RenView {
    const double* table;  // [a_label * nlab + b_label]
    int nlab;
    double operator()(int a, int b) const {
        return table[static_cast<std::size_t>(a) * nlab + b];
    }
};

// Distance matrix access in operand order; the underlying matrix always
// stores (F-node, G-node).
struct DistView {
    DistanceMatrix* D;
    bool transposed;

    double get(NodeId a, NodeId b) const {
        assert(transposed ? D->is_filled(b, a) : D->is_filled(a, b));
        return transposed ? D->at(b, a) : D->at(a, b);
    }
    void set(NodeId a, NodeId b, double value) const {
        if (transposed)
            D->set(b, a, value);
        else
            D->set(a, b, value);
    }
};

inline double min3(double a, double b, double c) {
    return std::min(a, std::min(b, c));
}

// ---------------------------------------------------------------------------
// Left/right single-path function (the forest-distance scheme of the classic
// left-path algorithm, restricted to one path). One core handles both
// orientations: the left version runs on postorder prefixes of subtree
// intervals, the right version on mirror-postorder prefixes. Every prefix is
// a relevant subforest of the path, and cutting a prefix back to a subtree
// boundary stays inside the table.

// Coordinates of one orientation: node -> coordinate and back. For the left
// case the coordinate is the postorder id itself; for the right case it is
// the mirror postorder.
struct Coords {
    const int* coord_of;
    const NodeId* node_at;
};

// Keyroots of the left (mirror: right) path partitioning of B's subtree wB in
// ascending coordinate order: wB itself plus every node that is not the
// first child of its parent under the orientation.
template <bool Mirror>
std::vector<NodeId> partition_keyroots(const TreeIndex& B, NodeId wB,
                                       const Coords& bc) {
    std::vector<NodeId> ks;
    const int hi = bc.coord_of[wB];
    const int lo = hi - B.size[wB] + 1;
    for (int cpos = lo; cpos <= hi; ++cpos) {
        NodeId y = bc.node_at[cpos];
        if (y == wB) {
            ks.push_back(y);
            continue;
        }
        NodeId p = B.parent[y];
        NodeId path_child = Mirror ? B.rightmost_child(p) : B.leftmost_child(p);
        if (y != path_child) ks.push_back(y);
    }
    return ks;
}

template <bool Mirror>
void zs_single_path(const OperandView& A, NodeId vA, const OperandView& B,
                    NodeId wB, const Coords& ac, const Coords& bc,
                    const DistView& D, const RenView& ren,
                    std::uint64_t& counter) {
    const TreeIndex& TA = *A.ix;
    const TreeIndex& TB = *B.ix;
    const int a_begin = ac.coord_of[vA] - TA.size[vA] + 1;
    const int nf = TA.size[vA];
    const int stride = TB.size[wB] + 1;

    std::vector<double> fd(static_cast<std::size_t>(nf + 1) * stride, 0.0);
    auto cell = [&fd, stride](int a, int b) -> double& {
        return fd[static_cast<std::size_t>(a) * stride + b];
    };

    for (NodeId j : partition_keyroots<Mirror>(TB, wB, bc)) {
        const int b_begin = bc.coord_of[j] - TB.size[j] + 1;
        const int ng = TB.size[j];

        cell(0, 0) = 0.0;
        for (int a = 1; a <= nf; ++a)
            cell(a, 0) = cell(a - 1, 0) + A.del[ac.node_at[a_begin + a - 1]];
        for (int b = 1; b <= ng; ++b)
            cell(0, b) = cell(0, b - 1) + B.ins[bc.node_at[b_begin + b - 1]];

        for (int a = 1; a <= nf; ++a) {
            const NodeId x = ac.node_at[a_begin + a - 1];
            const int x_begin = ac.coord_of[x] - TA.size[x] + 1;
            const bool x_tree = (x_begin == a_begin);
            const double del_x = A.del[x];
            for (int b = 1; b <= ng; ++b) {
                const NodeId y = bc.node_at[b_begin + b - 1];
                const int y_begin = bc.coord_of[y] - TB.size[y] + 1;
                const bool y_tree = (y_begin == b_begin);
                double value;
                if (x_tree && y_tree) {
                    value = min3(cell(a - 1, b) + del_x,
                                 cell(a, b - 1) + B.ins[y],
                                 cell(a - 1, b - 1) + ren(A.lab[x], B.lab[y]));
                    D.set(x, y, value);
                } else {
                    value = min3(cell(a - 1, b) + del_x,
                                 cell(a, b - 1) + B.ins[y],
                                 cell(x_begin - a_begin, y_begin - b_begin) +
                                     D.get(x, y));
                }
                cell(a, b) = value;
                ++counter;
            }
        }
    }
}

struct LeftRightCoords {
    std::vector<NodeId> identity;  // postorder coordinates are the ids
    Coords post_f, post_g;

    LeftRightCoords(const TreeIndex& F, const TreeIndex& G) {
        identity.resize(std::max(F.n, G.n) + 1);
        for (std::size_t i = 0; i < identity.size(); ++i)
            identity[i] = static_cast<NodeId>(i);
        post_f = {identity.data(), identity.data()};
        post_g = {identity.data(), identity.data()};
    }
};

Coords post_coords(const std::vector<NodeId>& identity) {
    return {identity.data(), identity.data()};
}

Coords rpost_coords(const TreeIndex& ix) {
    return {ix.rpost.data(), ix.node_at_rpost.data()};
}

// ---------------------------------------------------------------------------
// General single-path function (any root-leaf path; used for heavy paths).
//
// The decomposed side runs through its relevant-subforest sequence F_0 += F,
// F_1, ..., F_{n-1}; the other side runs through its entire full
// decomposition. A subforest of the full decomposition is identified by its
// pair of boundary roots (leftmost root, rightmost root): the node set is
// exactly { z : rpost(z) <= rpost(L) and post(z) <= post(R) }. The DP keeps
// one value slice per F-forest, releasing slices once no later forest can
// reach them through a subtree-removal jump.

struct GenericStates {
    // state arrays, index = state id; state 0 is the whole subtree (wB, wB)
    std::vector<NodeId> left, right;
    std::vector<int> size;
    std::vector<double> ins_sum;  // distance from the empty forest
    // transitions (state id or -1 when the result is empty)
    std::vector<int> remove_left_node, remove_right_node;
    std::vector<int> remove_left_subtree, remove_right_subtree;
    std::vector<int> by_size;  // state ids ordered by ascending size
};

// Enumerates the full decomposition of B's subtree wB and its transition
// structure. The number of states must match full_count[wB].
GenericStates enumerate_states(const OperandView& B, NodeId wB) {
    const TreeIndex& TB = *B.ix;
    GenericStates st;
    std::unordered_map<std::uint64_t, int> interned;
    auto key = [](NodeId l, NodeId r) {
        return (static_cast<std::uint64_t>(l) << 32) |
               static_cast<std::uint32_t>(r);
    };

    // Sum of insertion costs over a whole subtree, via postorder prefix sums
    // over wB's interval.
    const int lo = TB.subtree_begin(wB);
    std::vector<double> ins_prefix(TB.size[wB] + 1, 0.0);
    for (int i = 1; i <= TB.size[wB]; ++i)
        ins_prefix[i] = ins_prefix[i - 1] + B.ins[lo + i - 1];
    auto subtree_ins = [&](NodeId y) {
        return ins_prefix[y - lo + 1] - ins_prefix[TB.subtree_begin(y) - lo];
    };

    auto make_state = [&](NodeId l, NodeId r, int sz, double isum) {
        auto [it, fresh] = interned.emplace(key(l, r), static_cast<int>(st.left.size()));
        if (fresh) {
            st.left.push_back(l);
            st.right.push_back(r);
            st.size.push_back(sz);
            st.ins_sum.push_back(isum);
            st.remove_left_node.push_back(-2);
            st.remove_right_node.push_back(-2);
            st.remove_left_subtree.push_back(-2);
            st.remove_right_subtree.push_back(-2);
        }
        return it->second;
    };

    // First survivor scanning down mirror postorder, skipping nodes right of
    // the surviving rightmost root (their postorder id exceeds limit).
    auto walk_rpost = [&TB](int start, NodeId post_limit) {
        int r = start;
        while (TB.node_at_rpost[r] > post_limit) --r;
        return TB.node_at_rpost[r];
    };
    // Mirror: first survivor scanning down postorder, skipping nodes left of
    // the surviving leftmost root.
    auto walk_post = [&TB](int start, NodeId left_root) {
        int p = start;
        while (TB.rpost[p] > TB.rpost[left_root]) --p;
        return p;
    };

    make_state(wB, wB, TB.size[wB], subtree_ins(wB));
    for (int s = 0; s < static_cast<int>(st.left.size()); ++s) {
        const NodeId l = st.left[s], r = st.right[s];
        const int sz = st.size[s];
        const double isum = st.ins_sum[s];
        if (l == r) {
            // whole subtree; removing the root in either direction exposes
            // the children span, removing its subtree empties the forest
            int t = -1;
            if (!TB.is_leaf(l))
                t = make_state(TB.leftmost_child(l), TB.rightmost_child(l),
                               sz - 1, isum - B.ins[l]);
            st.remove_left_node[s] = t;
            st.remove_right_node[s] = t;
            st.remove_left_subtree[s] = -1;
            st.remove_right_subtree[s] = -1;
            continue;
        }
        {
            NodeId l1 = walk_rpost(TB.rpost[l] - 1, r);
            st.remove_left_node[s] =
                make_state(l1, r, sz - 1, isum - B.ins[l]);
        }
        {
            NodeId l2 = walk_rpost(TB.rpost[l] - TB.size[l], r);
            st.remove_left_subtree[s] =
                make_state(l2, r, sz - TB.size[l], isum - subtree_ins(l));
        }
        {
            NodeId r1 = walk_post(r - 1, l);
            st.remove_right_node[s] =
                make_state(l, r1, sz - 1, isum - B.ins[r]);
        }
        {
            NodeId r2 = walk_post(r - TB.size[r], l);
            st.remove_right_subtree[s] =
                make_state(l, r2, sz - TB.size[r], isum - subtree_ins(r));
        }
    }

    st.by_size.resize(st.left.size());
    for (std::size_t i = 0; i < st.by_size.size(); ++i)
        st.by_size[i] = static_cast<int>(i);
    std::sort(st.by_size.begin(), st.by_size.end(), [&st](int a, int b) {
        if (st.size[a] != st.size[b]) return st.size[a] < st.size[b];
        return a < b;
    });
    return st;
}

// The relevant-subforest sequence of A's subtree vA along `path`: the node
// removed at each step, the removal direction, and which steps start at a
// whole subtree rooted on the path.
struct EatingSequence {
    std::vector<NodeId> removed;
    std::vector<unsigned char> dir_right;
    std::vector<NodeId> tree_root;  // path node when the forest is its subtree
    std::vector<double> del_sum;    // del_sum[i] = distance of forest i to empty
};

EatingSequence eating_sequence(const OperandView& A, NodeId vA,
                               const std::vector<NodeId>& path) {
    const TreeIndex& TA = *A.ix;
    const int n = TA.size[vA];
    EatingSequence seq;
    seq.removed.reserve(n);
    seq.dir_right.reserve(n);
    seq.tree_root.assign(n, 0);

    for (std::size_t s = 0; s < path.size(); ++s) {
        const NodeId x = path[s];
        const NodeId next = (s + 1 < path.size()) ? path[s + 1] : 0;
        seq.tree_root[seq.removed.size()] = x;
        seq.removed.push_back(x);
        seq.dir_right.push_back(1);
        if (next == 0) break;
        const auto& kids = TA.children[x];
        const auto next_at = std::find(kids.begin(), kids.end(), next);
        // subtrees left of the path child go first, one node at a time in
        // leftmost-root removal order (descending mirror postorder)
        for (auto it = kids.begin(); it != next_at; ++it) {
            for (int k = 0; k < TA.size[*it]; ++k) {
                seq.removed.push_back(TA.node_at_rpost[TA.rpost[*it] - k]);
                seq.dir_right.push_back(0);
            }
        }
        // then the subtrees right of the path child, rightmost-root order
        for (auto it = kids.end() - 1; it != next_at; --it) {
            for (int k = 0; k < TA.size[*it]; ++k) {
                seq.removed.push_back(*it - k);
                seq.dir_right.push_back(1);
            }
        }
    }
    assert(static_cast<int>(seq.removed.size()) == n);

    seq.del_sum.assign(n + 1, 0.0);
    for (int i = n - 1; i >= 0; --i)
        seq.del_sum[i] = seq.del_sum[i + 1] + A.del[seq.removed[i]];
    return seq;
}

void generic_single_path(const OperandView& A, NodeId vA, const OperandView& B,
                         NodeId wB, const std::vector<NodeId>& path,
                         const DistView& D, const RenView& ren,
                         std::uint64_t& counter) {
    const TreeIndex& TA = *A.ix;
    const int n = TA.size[vA];

    const EatingSequence seq = eating_sequence(A, vA, path);
    const GenericStates st = enumerate_states(B, wB);
    const int num_states = static_cast<int>(st.left.size());
    assert(static_cast<std::uint64_t>(num_states) == B.ix->full_count[wB]);

    // Slice lifetimes: slice t is read while computing slice t-1 and by any
    // earlier forest whose end-subtree removal jumps to t.
    std::vector<int> keep_until(n + 1);
    for (int t = 0; t <= n; ++t) keep_until[t] = t - 1;
    for (int i = 0; i < n; ++i) {
        const int target = i + TA.size[seq.removed[i]];
        keep_until[target] = std::min(keep_until[target], i);
    }
    std::vector<std::vector<int>> free_after(n);
    for (int t = 1; t <= n; ++t)
        if (keep_until[t] >= 0) free_after[keep_until[t]].push_back(t);

    std::vector<std::vector<double>> slices(n + 1);
    slices[n] = st.ins_sum;  // distances from the empty forest

    for (int i = n - 1; i >= 0; --i) {
        std::vector<double> cur(num_states);
        const std::vector<double>& prev = slices[i + 1];
        const NodeId vi = seq.removed[i];
        const bool dir_right = seq.dir_right[i] != 0;
        const NodeId x_tree = seq.tree_root[i];
        const double del_v = A.del[vi];
        const int fi = i + TA.size[vi];
        const std::vector<double>& far = slices[fi];
        assert(x_tree == 0 || dir_right);

        for (int s : st.by_size) {
            const bool s_tree = (st.left[s] == st.right[s]);
            double value;
            if (x_tree != 0 && s_tree) {
                const NodeId u = st.left[s];
                const int t = st.remove_left_node[s];
                const double del_case = prev[s] + del_v;
                const double ins_case =
                    (t >= 0 ? cur[t] : seq.del_sum[i]) + B.ins[u];
                const double ren_case =
                    (t >= 0 ? prev[t] : seq.del_sum[i + 1]) +
                    ren(A.lab[x_tree], B.lab[u]);
                value = min3(del_case, ins_case, ren_case);
                D.set(x_tree, u, value);
            } else if (x_tree != 0) {
                const NodeId y = st.right[s];
                const int t1 = st.remove_right_node[s];
                const int t2 = st.remove_right_subtree[s];
                const double del_case = prev[s] + del_v;
                const double ins_case =
                    (t1 >= 0 ? cur[t1] : seq.del_sum[i]) + B.ins[y];
                const double match_case =
                    D.get(x_tree, y) + (t2 >= 0 ? st.ins_sum[t2] : 0.0);
                value = min3(del_case, ins_case, match_case);
            } else if (s_tree) {
                const NodeId u = st.left[s];
                const int t1 = st.remove_left_node[s];
                const double del_case = prev[s] + del_v;
                const double ins_case =
                    (t1 >= 0 ? cur[t1] : seq.del_sum[i]) + B.ins[u];
                const double match_case = D.get(vi, u) + seq.del_sum[fi];
                value = min3(del_case, ins_case, match_case);
            } else {
                const NodeId w =
                    dir_right ? st.right[s] : st.left[s];
                const int t1 = dir_right ? st.remove_right_node[s]
                                         : st.remove_left_node[s];
                const int t2 = dir_right ? st.remove_right_subtree[s]
                                         : st.remove_left_subtree[s];
                const double del_case = prev[s] + del_v;
                const double ins_case =
                    (t1 >= 0 ? cur[t1] : seq.del_sum[i]) + B.ins[w];
                const double match_case =
                    D.get(vi, w) + (t2 >= 0 ? far[t2] : seq.del_sum[fi]);
                value = min3(del_case, ins_case, match_case);
            }
            cur[s] = value;
            ++counter;
        }

        slices[i] = std::move(cur);
        for (int t : free_after[i]) {
            std::vector<double>().swap(slices[t]);
        }
    }
}

// ---------------------------------------------------------------------------
// GTED recursion.

struct GtedRun {
    const TreeIndex& F;
    const TreeIndex& G;
    const StrategyMatrix& S;
    RunCosts rc;
    DistanceMatrix D;
    ExecStats stats;
    std::vector<NodeId> identity;

    GtedRun(const TreeIndex& f, const TreeIndex& g, const StrategyMatrix& s,
            const CostModel& c)
        : F(f), G(g), S(s), rc(resolve_costs(f, g, c)), D(f.n, g.n) {
        identity.resize(std::max(f.n, g.n) + 1);
        for (std::size_t i = 0; i < identity.size(); ++i)
            identity[i] = static_cast<NodeId>(i);
    }

    OperandView f_primary() const {
        return {&F, rc.del_f.data(), rc.ins_f.data(), rc.lab_f.data()};
    }
    OperandView g_primary() const {
        return {&G, rc.del_g.data(), rc.ins_g.data(), rc.lab_g.data()};
    }
    // Swapped operand order: deleting a node of the original right tree costs
    // its insertion and vice versa.
    OperandView g_as_first() const {
        return {&G, rc.ins_g.data(), rc.del_g.data(), rc.lab_g.data()};
    }
    OperandView f_as_second() const {
        return {&F, rc.ins_f.data(), rc.del_f.data(), rc.lab_f.data()};
    }

    void run(NodeId v, NodeId w) {
        const PathChoice choice = S.at(v, w);
        if (choice.side == TreeSide::LeftTree) {
            const auto path = root_leaf_path(F, v, choice.kind);
            for (NodeId x : relevant_subtrees(F, v, path)) run(x, w);
            const OperandView a = f_primary(), b = g_primary();
            const DistView d{&D, false};
            const RenView ren{rc.ren.data(), rc.nlab};
            switch (choice.kind) {
                case PathKind::Left:
                    zs_single_path<false>(a, v, b, w, post_coords(identity),
                                          post_coords(identity), d, ren,
                                          stats.delta_left_subproblems);
                    break;
                case PathKind::Right:
                    zs_single_path<true>(a, v, b, w, rpost_coords(F),
                                         rpost_coords(G), d, ren,
                                         stats.delta_right_subproblems);
                    break;
                case PathKind::Heavy:
                    generic_single_path(a, v, b, w, path, d, ren,
                                        stats.delta_generic_subproblems);
                    break;
            }
        } else {
            const auto path = root_leaf_path(G, w, choice.kind);
            for (NodeId y : relevant_subtrees(G, w, path)) run(v, y);
            const OperandView a = g_as_first(), b = f_as_second();
            const DistView d{&D, true};
            const RenView ren{rc.ren_t.data(), rc.nlab};
            switch (choice.kind) {
                case PathKind::Left:
                    zs_single_path<false>(a, w, b, v, post_coords(identity),
                                          post_coords(identity), d, ren,
                                          stats.delta_left_subproblems);
                    break;
                case PathKind::Right:
                    zs_single_path<true>(a, w, b, v, rpost_coords(G),
                                         rpost_coords(F), d, ren,
                                         stats.delta_right_subproblems);
                    break;
                case PathKind::Heavy:
                    generic_single_path(a, w, b, v, path, d, ren,
                                        stats.delta_generic_subproblems);
                    break;
            }
        }
    }
};

}  // namespace

// Public single-path entry points (used directly by tests; gted goes through
// the same cores).
namespace {

struct SinglePathEnv {
    RunCosts rc;
    std::vector<NodeId> identity;
    SinglePathEnv(const TreeIndex& F, const TreeIndex& G, const CostModel& c)
        : rc(resolve_costs(F, G, c)) {
        identity.resize(std::max(F.n, G.n) + 1);
        for (std::size_t i = 0; i < identity.size(); ++i)
            identity[i] = static_cast<NodeId>(i);
    }
};

}  // namespace

void delta_left(const TreeIndex& F, NodeId vF, const TreeIndex& G, NodeId wG,
                DistanceMatrix& D, const CostModel& c, ExecStats& stats) {
    SinglePathEnv env(F, G, c);
    const OperandView a{&F, env.rc.del_f.data(), env.rc.ins_f.data(),
                        env.rc.lab_f.data()};
    const OperandView b{&G, env.rc.del_g.data(), env.rc.ins_g.data(),
                        env.rc.lab_g.data()};
    std::uint64_t before = stats.delta_left_subproblems;
    zs_single_path<false>(a, vF, b, wG, post_coords(env.identity),
                          post_coords(env.identity), DistView{&D, false},
                          RenView{env.rc.ren.data(), env.rc.nlab},
                          stats.delta_left_subproblems);
    stats.subproblems += stats.delta_left_subproblems - before;
}

void delta_right(const TreeIndex& F, NodeId vF, const TreeIndex& G, NodeId wG,
                 DistanceMatrix& D, const CostModel& c, ExecStats& stats) {
    SinglePathEnv env(F, G, c);
    const OperandView a{&F, env.rc.del_f.data(), env.rc.ins_f.data(),
                        env.rc.lab_f.data()};
    const OperandView b{&G, env.rc.del_g.data(), env.rc.ins_g.data(),
                        env.rc.lab_g.data()};
    std::uint64_t before = stats.delta_right_subproblems;
    zs_single_path<true>(a, vF, b, wG, rpost_coords(F), rpost_coords(G),
                         DistView{&D, false},
                         RenView{env.rc.ren.data(), env.rc.nlab},
                         stats.delta_right_subproblems);
    stats.subproblems += stats.delta_right_subproblems - before;
}

void delta_generic(const TreeIndex& F, NodeId vF, const TreeIndex& G,
                   NodeId wG, const std::vector<NodeId>& path,
                   DistanceMatrix& D, const CostModel& c, ExecStats& stats) {
    SinglePathEnv env(F, G, c);
    const OperandView a{&F, env.rc.del_f.data(), env.rc.ins_f.data(),
                        env.rc.lab_f.data()};
    const OperandView b{&G, env.rc.del_g.data(), env.rc.ins_g.data(),
                        env.rc.lab_g.data()};
    std::uint64_t before = stats.delta_generic_subproblems;
    generic_single_path(a, vF, b, wG, path, DistView{&D, false},
                        RenView{env.rc.ren.data(), env.rc.nlab},
                        stats.delta_generic_subproblems);
    stats.subproblems += stats.delta_generic_subproblems - before;
}

std::pair<DistanceMatrix, ExecStats> gted(const TreeIndex& F,
                                          const TreeIndex& G,
                                          const StrategyMatrix& S,
                                          const CostModel& c) {
    GtedRun run(F, G, S, c);
    run.run(F.root(), G.root());
    run.stats.subproblems = run.stats.delta_left_subproblems +
                            run.stats.delta_right_subproblems +
                            run.stats.delta_generic_subproblems;
    return {std::move(run.D), run.stats};
}

DistanceResult tree_edit_distance(const Tree& F, const Tree& G, Algorithm algo,
                                  const CostModel& c) {
    using clock = std::chrono::steady_clock;
    const TreeIndex fi = build_index(F);
    const TreeIndex gi = build_index(G);

    const auto t0 = clock::now();
    StrategyMatrix S;
    switch (algo) {
        case Algorithm::RTED: S = opt_strategy(fi, gi).matrix; break;
        case Algorithm::ZhangL:
            S = fixed_strategy(FixedStrategyKind::ZhangL, fi, gi);
            break;
        case Algorithm::ZhangR:
            S = fixed_strategy(FixedStrategyKind::ZhangR, fi, gi);
            break;
        case Algorithm::KleinH:
            S = fixed_strategy(FixedStrategyKind::KleinH, fi, gi);
            break;
        case Algorithm::DemaineH:
            S = fixed_strategy(FixedStrategyKind::DemaineH, fi, gi);
            break;
    }
    const auto t1 = clock::now();
    auto [D, stats] = gted(fi, gi, S, c);
    const auto t2 = clock::now();

    stats.strategy_time_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    stats.distance_time_ms =
        std::chrono::duration<double, std::milli>(t2 - t1).count();
    return {D.at(fi.root(), gi.root()), stats};
}

// ---------------------------------------------------------------------------
// Brute-force oracle: memoized evaluation of the recursive formula, always
// removing rightmost roots. Forests are postorder intervals of the indexed
// trees (removing a rightmost root or a rightmost subtree keeps intervals).

namespace {

struct BruteEval {
    const TreeIndex& F;
    const TreeIndex& G;
    std::vector<double> del_prefix_f, ins_prefix_g;
    std::vector<double> delf, insg;
    std::vector<int> labf, labg;
    RunCosts rc;
    std::unordered_map<std::uint64_t, double> memo;

    BruteEval(const TreeIndex& f, const TreeIndex& g, const CostModel& c)
        : F(f), G(g), rc(resolve_costs(f, g, c)) {
        del_prefix_f.assign(F.n + 1, 0.0);
        for (int v = 1; v <= F.n; ++v)
            del_prefix_f[v] = del_prefix_f[v - 1] + rc.del_f[v];
        ins_prefix_g.assign(G.n + 1, 0.0);
        for (int w = 1; w <= G.n; ++w)
            ins_prefix_g[w] = ins_prefix_g[w - 1] + rc.ins_g[w];
    }

    double dist(int lo_f, int hi_f, int lo_g, int hi_g) {
        const bool f_empty = lo_f > hi_f;
        const bool g_empty = lo_g > hi_g;
        if (f_empty && g_empty) return 0.0;
        if (f_empty) return ins_prefix_g[hi_g] - ins_prefix_g[lo_g - 1];
        if (g_empty) return del_prefix_f[hi_f] - del_prefix_f[lo_f - 1];

        const std::uint64_t key = (static_cast<std::uint64_t>(lo_f) << 48) |
                                  (static_cast<std::uint64_t>(hi_f) << 32) |
                                  (static_cast<std::uint64_t>(lo_g) << 16) |
                                  static_cast<std::uint64_t>(hi_g);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const int fsub = F.subtree_begin(hi_f);
        const int gsub = G.subtree_begin(hi_g);
        const bool f_tree = (fsub == lo_f);
        const bool g_tree = (gsub == lo_g);

        double result;
        const double del_case =
            dist(lo_f, hi_f - 1, lo_g, hi_g) + rc.del_f[hi_f];
        const double ins_case =
            dist(lo_f, hi_f, lo_g, hi_g - 1) + rc.ins_g[hi_g];
        if (f_tree && g_tree) {
            const double ren_case =
                dist(lo_f, hi_f - 1, lo_g, hi_g - 1) +
                rc.ren[static_cast<std::size_t>(rc.lab_f[hi_f]) * rc.nlab +
                       rc.lab_g[hi_g]];
            result = min3(del_case, ins_case, ren_case);
        } else {
            const double match_case = dist(fsub, hi_f, gsub, hi_g) +
                                      dist(lo_f, fsub - 1, lo_g, gsub - 1);
            result = min3(del_case, ins_case, match_case);
        }
        memo.emplace(key, result);
        return result;
    }
};

}  // namespace

double brute_force_distance(const Tree& F, const Tree& G, const CostModel& c) {
    const TreeIndex fi = build_index(F);
    const TreeIndex gi = build_index(G);
    if (static_cast<std::uint64_t>(fi.n) * gi.n > 1024)
        throw OracleLimitError("brute_force_distance: |F|*|G| > 1024");
    BruteEval eval(fi, gi, c);
    return eval.dist(1, fi.n, 1, gi.n);
}

}  // namespace ted

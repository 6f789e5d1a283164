#include "ted/strategy.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <unordered_map>

namespace ted {

namespace {

constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

// The six rows of the cost recursion, in tie-break order.
constexpr std::array<PathChoice, 6> kCandidates = {{
    {TreeSide::LeftTree, PathKind::Heavy},
    {TreeSide::RightTree, PathKind::Heavy},
    {TreeSide::LeftTree, PathKind::Left},
    {TreeSide::RightTree, PathKind::Left},
    {TreeSide::LeftTree, PathKind::Right},
    {TreeSide::RightTree, PathKind::Right},
}};

std::uint64_t path_count(const TreeIndex& ix, NodeId v, PathKind k) {
    switch (k) {
        case PathKind::Left: return ix.left_count[v];
        case PathKind::Right: return ix.right_count[v];
        case PathKind::Heavy: return ix.full_count[v];
    }
    return 0;
}

}  // namespace

StrategyResult opt_strategy(const TreeIndex& F, const TreeIndex& G) {
    const int nf = F.n, ng = G.n;
    const std::size_t cellsf = static_cast<std::size_t>(nf + 1) * (ng + 1);

    // Cost sums over the relevant subtrees of F_v (per pair) and of G_w
    // (against the current F_v only).
    std::vector<std::uint64_t> Lv(cellsf, 0), Rv(cellsf, 0), Hv(cellsf, 0);
    std::vector<std::uint64_t> Lw(ng + 1, 0), Rw(ng + 1, 0), Hw(ng + 1, 0);
    auto cell = [ng](NodeId v, NodeId w) {
        return static_cast<std::size_t>(v) * (ng + 1) + w;
    };

    StrategyMatrix str(nf, ng);
    std::uint64_t root_cost = 0;

    for (NodeId v = 1; v <= nf; ++v) {
        const std::uint64_t fsize = F.size[v];
        for (NodeId w = 1; w <= ng; ++w) {
            const std::uint64_t gsize = G.size[w];
            const std::size_t c = cell(v, w);

            const std::array<std::uint64_t, 6> costs = {
                fsize * G.full_count[w] + Hv[c],
                gsize * F.full_count[v] + Hw[w],
                fsize * G.left_count[w] + Lv[c],
                gsize * F.left_count[v] + Lw[w],
                fsize * G.right_count[w] + Rv[c],
                gsize * F.right_count[v] + Rw[w],
            };
            int best = 0;
            for (int i = 1; i < 6; ++i)
                if (costs[i] < costs[best]) best = i;
            const std::uint64_t cmin = costs[best];
            str.at(v, w) = kCandidates[best];

            if (NodeId p = F.parent[v]; p != 0) {
                const std::size_t pc = cell(p, w);
                Lv[pc] += (v == F.leftmost_child(p)) ? Lv[c] : cmin;
                Rv[pc] += (v == F.rightmost_child(p)) ? Rv[c] : cmin;
                Hv[pc] += (v == F.heavy_child[p]) ? Hv[c] : cmin;
            }
            if (NodeId q = G.parent[w]; q != 0) {
                Lw[q] += (w == G.leftmost_child(q)) ? Lw[w] : cmin;
                Rw[q] += (w == G.rightmost_child(q)) ? Rw[w] : cmin;
                Hw[q] += (w == G.heavy_child[q]) ? Hw[w] : cmin;
            }
            // The |G|-sized sums are consumed once per v iteration.
            Lw[w] = Rw[w] = Hw[w] = 0;

            if (v == nf && w == ng) root_cost = cmin;
        }
    }
    return {std::move(str), {root_cost}};
}

namespace {

struct BaselineEval {
    const TreeIndex& F;
    const TreeIndex& G;
    std::vector<std::uint64_t> memo;  // kUnset = not computed
    StrategyMatrix str;
    std::uint64_t summations = 0;

    BaselineEval(const TreeIndex& f, const TreeIndex& g)
        : F(f), G(g),
          memo(static_cast<std::size_t>(f.n) * g.n, kUnset),
          str(f.n, g.n) {}

    std::uint64_t cost(NodeId v, NodeId w) {
        std::uint64_t& slot = memo[static_cast<std::size_t>(v - 1) * G.n + (w - 1)];
        if (slot != kUnset) return slot;

        std::uint64_t best = kUnset;
        PathChoice best_choice{};
        for (const PathChoice& cand : kCandidates) {
            std::uint64_t total;
            if (cand.side == TreeSide::LeftTree) {
                total = static_cast<std::uint64_t>(F.size[v]) *
                        path_count(G, w, cand.kind);
                auto path = root_leaf_path(F, v, cand.kind);
                auto rel = relevant_subtrees(F, v, path);
                summations += rel.size();
                for (NodeId x : rel) total += cost(x, w);
            } else {
                total = static_cast<std::uint64_t>(G.size[w]) *
                        path_count(F, v, cand.kind);
                auto path = root_leaf_path(G, w, cand.kind);
                auto rel = relevant_subtrees(G, w, path);
                summations += rel.size();
                for (NodeId y : rel) total += cost(v, y);
            }
            if (total < best) {
                best = total;
                best_choice = cand;
            }
        }
        str.at(v, w) = best_choice;
        slot = best;
        return best;
    }
};

}  // namespace

BaselineResult baseline_strategy(const TreeIndex& F, const TreeIndex& G) {
    BaselineEval eval(F, G);
    std::uint64_t total = eval.cost(F.root(), G.root());
    return {std::move(eval.str), {total}, eval.summations};
}

StrategyMatrix fixed_strategy(FixedStrategyKind kind, const TreeIndex& F,
                              const TreeIndex& G) {
    switch (kind) {
        case FixedStrategyKind::ZhangL:
            return StrategyMatrix(F.n, G.n, {TreeSide::LeftTree, PathKind::Left});
        case FixedStrategyKind::ZhangR:
            return StrategyMatrix(F.n, G.n, {TreeSide::LeftTree, PathKind::Right});
        case FixedStrategyKind::KleinH:
            return StrategyMatrix(F.n, G.n, {TreeSide::LeftTree, PathKind::Heavy});
        case FixedStrategyKind::DemaineH: {
            StrategyMatrix s(F.n, G.n);
            for (NodeId v = 1; v <= F.n; ++v)
                for (NodeId w = 1; w <= G.n; ++w)
                    s.at(v, w) = (F.size[v] >= G.size[w])
                                     ? PathChoice{TreeSide::LeftTree, PathKind::Heavy}
                                     : PathChoice{TreeSide::RightTree, PathKind::Heavy};
            return s;
        }
    }
    return {};
}

namespace {

struct CostEval {
    const TreeIndex& F;
    const TreeIndex& G;
    const StrategyMatrix& S;
    std::vector<std::uint64_t> memo;

    CostEval(const TreeIndex& f, const TreeIndex& g, const StrategyMatrix& s)
        : F(f), G(g), S(s),
          memo(static_cast<std::size_t>(f.n) * g.n, kUnset) {}

    std::uint64_t cost(NodeId v, NodeId w) {
        std::uint64_t& slot = memo[static_cast<std::size_t>(v - 1) * G.n + (w - 1)];
        if (slot != kUnset) return slot;
        const PathChoice choice = S.at(v, w);
        std::uint64_t total;
        if (choice.side == TreeSide::LeftTree) {
            total = static_cast<std::uint64_t>(F.size[v]) *
                    path_count(G, w, choice.kind);
            auto path = root_leaf_path(F, v, choice.kind);
            for (NodeId x : relevant_subtrees(F, v, path)) total += cost(x, w);
        } else {
            total = static_cast<std::uint64_t>(G.size[w]) *
                    path_count(F, v, choice.kind);
            auto path = root_leaf_path(G, w, choice.kind);
            for (NodeId y : relevant_subtrees(G, w, path)) total += cost(v, y);
        }
        slot = total;
        return total;
    }
};

}  // namespace

StrategyCost strategy_cost(const TreeIndex& F, const TreeIndex& G,
                           const StrategyMatrix& S) {
    CostEval eval(F, G, S);
    return {eval.cost(F.root(), G.root())};
}

namespace {

struct ExhaustiveEval {
    const TreeIndex& F;
    const TreeIndex& G;
    std::unordered_map<std::uint64_t, std::uint64_t> memo;

    std::uint64_t cost(NodeId v, NodeId w) {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(w);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t best = kUnset;
        for (const PathChoice& cand : kCandidates) {
            std::uint64_t total;
            if (cand.side == TreeSide::LeftTree) {
                total = static_cast<std::uint64_t>(F.size[v]) *
                        path_count(G, w, cand.kind);
                for (NodeId x :
                     relevant_subtrees(F, v, root_leaf_path(F, v, cand.kind)))
                    total += cost(x, w);
            } else {
                total = static_cast<std::uint64_t>(G.size[w]) *
                        path_count(F, v, cand.kind);
                for (NodeId y :
                     relevant_subtrees(G, w, root_leaf_path(G, w, cand.kind)))
                    total += cost(v, y);
            }
            best = std::min(best, total);
        }
        memo.emplace(key, best);
        return best;
    }
};

// One pending subtree pair of a partially assigned strategy.
struct PendingPair {
    NodeId v, w;
};

struct EnumerationSearch {
    const TreeIndex& F;
    const TreeIndex& G;
    std::uint64_t best = kUnset;
    std::uint64_t steps = 0;

    // Assign a path to the last pending pair, push the subtree pairs it
    // spawns, and recurse; minimizes over complete assignments only.
    void search(std::vector<PendingPair>& pending, std::uint64_t acc) {
        if (++steps > 200'000'000ULL)
            throw OracleLimitError("strategy enumeration exceeded step budget");
        if (acc >= best) return;  // partial sums only grow
        if (pending.empty()) {
            best = acc;
            return;
        }
        const PendingPair pair = pending.back();
        pending.pop_back();
        for (const PathChoice& cand : kCandidates) {
            std::uint64_t term;
            std::vector<NodeId> rel;
            if (cand.side == TreeSide::LeftTree) {
                term = static_cast<std::uint64_t>(F.size[pair.v]) *
                       path_count(G, pair.w, cand.kind);
                rel = relevant_subtrees(F, pair.v,
                                        root_leaf_path(F, pair.v, cand.kind));
                for (NodeId x : rel) pending.push_back({x, pair.w});
            } else {
                term = static_cast<std::uint64_t>(G.size[pair.w]) *
                       path_count(F, pair.v, cand.kind);
                rel = relevant_subtrees(G, pair.w,
                                        root_leaf_path(G, pair.w, cand.kind));
                for (NodeId y : rel) pending.push_back({pair.v, y});
            }
            search(pending, acc + term);
            pending.resize(pending.size() - rel.size());
        }
        pending.push_back(pair);
    }
};

}  // namespace

StrategyCost exhaustive_optimal_cost(const TreeIndex& F, const TreeIndex& G) {
    if (static_cast<std::uint64_t>(F.n) * G.n > 64)
        throw OracleLimitError("exhaustive_optimal_cost: |F|*|G| > 64");
    ExhaustiveEval eval{F, G};
    return {eval.cost(F.root(), G.root())};
}

StrategyCost enumerated_optimal_cost(const TreeIndex& F, const TreeIndex& G) {
    if (static_cast<std::uint64_t>(F.n) * G.n > 20)
        throw OracleLimitError("enumerated_optimal_cost: |F|*|G| > 20");
    EnumerationSearch search{F, G};
    std::vector<PendingPair> pending{{F.root(), G.root()}};
    search.search(pending, 0);
    return {search.best};
}

}  // namespace ted

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ted/tree_index.hpp"

namespace ted {

// Which of the two input trees a path lives in. LeftTree refers to the first
// operand (F), RightTree to the second (G).
enum class TreeSide : std::uint8_t { LeftTree, RightTree };

struct PathChoice {
    TreeSide side = TreeSide::LeftTree;
    PathKind kind = PathKind::Heavy;

    bool operator==(const PathChoice&) const = default;
};

// Per-subtree-pair path choice, indexed by postorder ids (v in F, w in G).
class StrategyMatrix {
public:
    StrategyMatrix() = default;
    StrategyMatrix(int nf, int ng, PathChoice fill = {})
        : nf_(nf), ng_(ng), cells_(static_cast<std::size_t>(nf) * ng, fill) {}

    PathChoice& at(NodeId v, NodeId w) {
        return cells_[static_cast<std::size_t>(v - 1) * ng_ + (w - 1)];
    }
    PathChoice at(NodeId v, NodeId w) const {
        return cells_[static_cast<std::size_t>(v - 1) * ng_ + (w - 1)];
    }
    int rows() const { return nf_; }
    int cols() const { return ng_; }

    bool operator==(const StrategyMatrix&) const = default;

private:
    int nf_ = 0, ng_ = 0;
    std::vector<PathChoice> cells_;
};

// Number of relevant subproblems a strategy makes GTED compute.
struct StrategyCost {
    std::uint64_t count = 0;
};

struct StrategyResult {
    StrategyMatrix matrix;
    StrategyCost cost;
};

struct BaselineResult {
    StrategyMatrix matrix;
    StrategyCost cost;
    // Number of additions spent summing relevant-subtree costs; grows
    // cubically on degenerate inputs.
    std::uint64_t summations = 0;
};

// Thrown when an oracle-scale routine is called on inputs beyond its guard.
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Optimal LRH strategy in O(|F|*|G|) time and space. At each subtree pair
// the six candidates (heavy-F, heavy-G, left-F, left-G, right-F, right-G)
// are evaluated in that order and the first minimum wins, which makes the
// result deterministic.
StrategyResult opt_strategy(const TreeIndex& F, const TreeIndex& G);

// Memoized top-down evaluation of the same cost recursion; cubic worst case.
// Oracle for opt_strategy and probe for the cubic-degeneration bound.
BaselineResult baseline_strategy(const TreeIndex& F, const TreeIndex& G);

enum class FixedStrategyKind : std::uint8_t { ZhangL, ZhangR, KleinH, DemaineH };

// The hard-coded strategies of the classic algorithms.
StrategyMatrix fixed_strategy(FixedStrategyKind kind, const TreeIndex& F,
                              const TreeIndex& G);

// Relevant-subproblem count of an arbitrary strategy (no distances computed;
// O(|F|*|G|) memory).
StrategyCost strategy_cost(const TreeIndex& F, const TreeIndex& G,
                           const StrategyMatrix& S);

// Minimum cost over all LRH strategies by direct recursion on the cost
// formula with per-pair memoization. Guarded to |F|*|G| <= 64.
StrategyCost exhaustive_optimal_cost(const TreeIndex& F, const TreeIndex& G);

// Second-level sanity oracle: walks every complete strategy assignment by
// backtracking, without distributing the minimum over subproblems.
// Guarded to |F|*|G| <= 20.
StrategyCost enumerated_optimal_cost(const TreeIndex& F, const TreeIndex& G);

}  // namespace ted

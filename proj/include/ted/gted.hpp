#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "ted/cost_model.hpp"
#include "ted/strategy.hpp"
#include "ted/tree_index.hpp"

namespace ted {

// Subtree-pair edit distances, keyed by postorder ids of the subtree roots.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int nf, int ng)
        : nf_(nf), ng_(ng),
          d_(static_cast<std::size_t>(nf) * ng, 0.0),
          filled_(static_cast<std::size_t>(nf) * ng, 0) {}

    double at(NodeId v, NodeId w) const { return d_[idx(v, w)]; }
    bool is_filled(NodeId v, NodeId w) const { return filled_[idx(v, w)] != 0; }
    void set(NodeId v, NodeId w, double value) {
        const std::size_t i = idx(v, w);
        d_[i] = value;
        filled_[i] = 1;
    }
    bool all_filled() const {
        for (unsigned char f : filled_)
            if (!f) return false;
        return true;
    }
    int rows() const { return nf_; }
    int cols() const { return ng_; }

private:
    std::size_t idx(NodeId v, NodeId w) const {
        return static_cast<std::size_t>(v - 1) * ng_ + (w - 1);
    }
    int nf_ = 0, ng_ = 0;
    std::vector<double> d_;
    std::vector<unsigned char> filled_;
};

// Counters and phase timings of one distance computation. `subproblems`
// increments exactly once per forest-pair cell evaluated through the
// min-recurrence inside any single-path function.
struct ExecStats {
    std::uint64_t subproblems = 0;
    std::uint64_t delta_left_subproblems = 0;
    std::uint64_t delta_right_subproblems = 0;
    std::uint64_t delta_generic_subproblems = 0;
    double strategy_time_ms = 0.0;
    double distance_time_ms = 0.0;
};

enum class Algorithm : std::uint8_t { RTED, ZhangL, ZhangR, KleinH, DemaineH };

// Single-path functions. Each fills D with the distances between the
// subtrees rooted on the respective root-leaf path of F_vF and all subtrees
// of G_wG. Precondition: D already holds the distances between every
// relevant subtree of F_vF w.r.t. that path and every subtree of G_wG
// (asserted cell-by-cell in debug builds).
void delta_left(const TreeIndex& F, NodeId vF, const TreeIndex& G, NodeId wG,
                DistanceMatrix& D, const CostModel& c, ExecStats& stats);
void delta_right(const TreeIndex& F, NodeId vF, const TreeIndex& G, NodeId wG,
                 DistanceMatrix& D, const CostModel& c, ExecStats& stats);
void delta_generic(const TreeIndex& F, NodeId vF, const TreeIndex& G,
                   NodeId wG, const std::vector<NodeId>& path,
                   DistanceMatrix& D, const CostModel& c, ExecStats& stats);

// Executes strategy S: fills the distance matrix with the distance between
// every pair of subtrees of F and G. Peak extra memory is quadratic for the
// tree shapes this project exercises (see README on the general-path table).
std::pair<DistanceMatrix, ExecStats> gted(const TreeIndex& F,
                                          const TreeIndex& G,
                                          const StrategyMatrix& S,
                                          const CostModel& c);

struct DistanceResult {
    double distance = 0.0;
    ExecStats stats;
};

// Builds indexes, obtains the strategy (opt_strategy for RTED, the
// hard-coded strategy otherwise), runs gted and reports the root distance
// with phase timings.
DistanceResult tree_edit_distance(const Tree& F, const Tree& G, Algorithm algo,
                                  const CostModel& c);

// Direct memoized evaluation of the recursive edit-distance formula, always
// removing rightmost roots. Oracle; guarded to |F|*|G| <= 1024.
double brute_force_distance(const Tree& F, const Tree& G, const CostModel& c);

}  // namespace ted

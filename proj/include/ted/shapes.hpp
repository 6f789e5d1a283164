#pragma once

#include <cstdint>
#include <optional>

#include "ted/tree.hpp"

namespace ted {

enum class ShapeKind : std::uint8_t {
    LeftBranch,
    RightBranch,
    ZigZag,
    FullBinary,
    Mixed,
    Random,
};

// Deterministic synthetic tree families. LeftBranch, RightBranch, ZigZag and
// Mixed take odd sizes (2k + 1); FullBinary takes either a size (heap-shaped
// completion) or a depth (perfect tree of 2^d - 1 nodes); Random grows a
// seeded tree of exactly `size` nodes within the depth and fanout caps.
struct ShapeSpec {
    ShapeKind kind = ShapeKind::Random;
    int size = 0;                  // node count; ignored when depth is given
    std::optional<int> depth;      // FullBinary only
    std::uint64_t seed = 0;        // Random / Mixed label streams
    int max_depth = 15;            // Random only
    int max_fanout = 6;            // Random only
    bool random_labels = false;    // draw labels from a small alphabet
};

Tree gen_shape(const ShapeSpec& spec);

// Split-mix generator used for all seeded randomness, so identical seeds
// reproduce identical trees in any implementation:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace ted

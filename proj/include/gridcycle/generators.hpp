#pragma once
#include <cstdint>
#include <variant>

#include "gridcycle/grid_graph.hpp"

namespace gridcycle {

struct Rectangle {
    int32_t m = 0, k = 0;  // vertex counts per axis: [0,m) x [0,k)
};
struct StaircaseDiamond {
    int32_t order = 0;  // vertex set of cells { |i|+|j| <= order-1 }
};
struct NestedDiamonds {
    int32_t depth = 0;  // cells { |i|+|j| <= 2*depth }: peels to `depth` nested diamond cycles
};
struct RandomSolid {
    int64_t cells = 0;
    uint64_t seed = 0;  // hole-free polyomino growth, rejection sampled
};

using GeneratorSpec = std::variant<Rectangle, StaircaseDiamond, NestedDiamonds, RandomSolid>;

// Deterministic for a given spec (and seed). Throws InvalidParameters on
// non-positive sizes.
GridGraph generate(const GeneratorSpec& spec);

} // namespace gridcycle

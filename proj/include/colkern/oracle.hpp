#ifndef COLKERN_ORACLE_HPP
#define COLKERN_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "colkern/graph.hpp"
#include "colkern/kernelizer.hpp"
#include "colkern/palette.hpp"

namespace colkern {

struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct ColoringWitness {
    std::optional<std::vector<int>> assignment;  // per-vertex color in [0, q)

    bool colorable() const { return assignment.has_value(); }
};

/// Exhaustive backtracking search for a proper q-coloring, highest degree
/// first, never opening more than one fresh color per step. The guard
/// rejects graphs with more than `size_limit` vertices.
ColoringWitness is_q_colorable(const Graph& g, int q, int size_limit = 24);

/// Brute-force check that "some proper modulator coloring passes
/// check_extension_conditions" agrees with is_q_colorable on the whole
/// graph. Enumerates all q^k modulator colorings, guarded by `limit`.
bool extension_equivalence(const KernelInstance& inst, std::uint64_t limit = 2000000);

/// All q^cols matrices whose columns are palette members, visited in
/// lexicographic order of the column-index tuple. The callback receives
/// the matrix and the palette indices that produced it.
void enumerate_colored_matrices(const Palette& p, int cols,
                                const std::function<void(const Matrix&, const std::vector<int>&)>& fn,
                                std::uint64_t limit = 1048576);

}  // namespace colkern

#endif

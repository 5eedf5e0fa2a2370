#ifndef COLKERN_KERNELIZER_HPP
#define COLKERN_KERNELIZER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colkern/graph.hpp"
#include "colkern/palette.hpp"
#include "colkern/sparsifier.hpp"

namespace colkern {

struct NotAModulatorError : std::invalid_argument {
    explicit NotAModulatorError(int witness_vertex)
        : std::invalid_argument("vertex " + std::to_string(witness_vertex) +
                                " keeps degree >= 2 after removing the modulator"),
          witness(witness_vertex) {}
    int witness;
};

struct LimitExceededError : std::runtime_error {
    LimitExceededError() : std::runtime_error("exact modulator search exceeded its budget") {}
};

struct ImproperColoringError : std::invalid_argument {
    ImproperColoringError(int u, int v)
        : std::invalid_argument("coloring assigns the same color to adjacent modulator vertices " +
                                std::to_string(u) + " and " + std::to_string(v)) {}
};

/// A q-Coloring instance whose graph becomes a disjoint union of edges and
/// isolated vertices once the modulator is removed.
struct KernelInstance {
    Graph graph;
    std::vector<int> modulator;  // sorted, duplicate-free
    int q;
};

/// Checks that every vertex outside X has at most one neighbor outside X.
void validate_instance(const Graph& g, const std::vector<int>& x);

struct ModulatorResult {
    std::vector<int> vertices;
    bool optimal;  // false when the exact search gave up and greedy took over
};

/// Smallest modulator by exhaustive search over subsets of increasing size;
/// falls back to a greedy (possibly non-minimum) modulator once `limit`
/// candidate subsets have been examined. With greedy disabled, throws
/// LimitExceededError instead.
ModulatorResult find_modulator(const Graph& g, std::uint64_t limit = 1000000,
                               bool allow_greedy = true);

/// All constraint tags of the instance in deterministic order: Type1 sorted
/// by (v, S), then Type2 sorted by (u1, u2, S1, S2), with both orientations
/// of every outside edge.
std::vector<ConstraintTag> enumerate_constraints(const KernelInstance& inst);

struct KernelStats {
    std::size_t p1_total = 0;
    std::size_t p1_basis = 0;
    std::size_t p2_total = 0;
    std::size_t p2_basis = 0;
    std::size_t kernel_vertices = 0;
    std::size_t kernel_edges = 0;
    std::uint64_t kernel_bits = 0;
};

struct KernelResult {
    Graph reduced;               // on compacted vertex ids 0..|V'|-1
    std::vector<int> kept;       // kept[i] = original id of reduced vertex i, ascending
    std::vector<int> modulator;  // modulator ids in the reduced graph, sorted
    KernelStats stats;
};

/// The full kernelization: enumerate constraints, keep a spanning subset of
/// each family via Gaussian elimination, and rebuild the graph from the
/// retained constraints' gadgets. The output is q-colorable iff the input is.
KernelResult kernelize(const KernelInstance& inst, const Palette& palette);

/// Proper q-coloring of the modulator, colors in [0, q).
using ModulatorColoring = std::map<int, int>;

struct ExtensionReport {
    bool ok = true;
    std::string violation;  // witness description when !ok
};

/// Checks the two coloring-extension conditions for every applicable
/// (v, S) and oriented (u1, u2, S1, S2).
ExtensionReport check_extension_conditions(const KernelInstance& inst,
                                           const ModulatorColoring& coloring);

/// Extends a modulator coloring that satisfies the extension conditions to
/// a proper q-coloring of the whole graph; empty when the preconditions
/// fail.
std::optional<std::vector<int>> extend_coloring(const KernelInstance& inst,
                                                const ModulatorColoring& coloring);

}  // namespace colkern

#endif

#ifndef COLKERN_INSTANCE_IO_HPP
#define COLKERN_INSTANCE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "colkern/graph.hpp"
#include "colkern/kernelizer.hpp"

namespace colkern {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

/// DIMACS coloring format: optional `c ...` comments, one `p edge <n> <m>`
/// line, then exactly m `e <u> <v>` lines with 1-based ids.
Graph parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

/// Sidecar listing the modulator: one 1-based id per line, strictly
/// ascending. Returned ids are 0-based.
std::vector<int> parse_modulator(std::istream& in, int vertex_count);
void write_modulator(std::ostream& out, const std::vector<int>& modulator);

struct GenSpec {
    int n = 0;
    int k = 0;
    int q = 3;
    double p_xx = 0.5;    // edge probability inside the modulator
    double p_xr = 0.5;    // modulator-to-rest edge probability
    double m_frac = 0.5;  // fraction of rest vertices matched in pairs
    std::uint64_t seed = 0;
};

/// Seeded random instance: modulator {0..k-1}, Bernoulli edges inside it
/// and toward the rest, and a partial matching on the rest. Identical
/// seeds give identical instances on every platform.
KernelInstance generate_instance(const GenSpec& spec);

}  // namespace colkern

#endif

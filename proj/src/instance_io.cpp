#include "colkern/instance_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace colkern {

namespace {

void reject_trailing(std::istringstream& ls, std::size_t line_no) {
    std::string rest;
    if (ls >> rest) throw ParseError(line_no, "unexpected trailing token '" + rest + "'");
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<Graph> g;
    long long declared_m = 0;
    long long edge_lines = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "c") continue;
        if (kind == "p") {
            if (g) throw ParseError(line_no, "duplicate problem line");
            std::string fmt;
            long long n = -1, m = -1;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw ParseError(line_no, "expected 'p edge <n> <m>'");
            reject_trailing(ls, line_no);
            g.emplace(static_cast<int>(n));
            declared_m = m;
        } else if (kind == "e") {
            if (!g) throw ParseError(line_no, "edge before the problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError(line_no, "expected 'e <u> <v>'");
            reject_trailing(ls, line_no);
            const long long n = g->vertex_count();
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range");
            if (u == v) throw ParseError(line_no, "loop edge");
            ++edge_lines;
            g->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError(line_no, "unknown line type '" + kind + "'");
        }
    }
    if (!g) throw ParseError(line_no, "missing problem line");
    if (edge_lines != declared_m)
        throw ParseError(line_no, "problem line declares " + std::to_string(declared_m) +
                                      " edges, file has " + std::to_string(edge_lines));
    return *g;
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::vector<int> parse_modulator(std::istream& in, int vertex_count) {
    std::vector<int> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        long long v;
        if (!(ls >> v)) {
            std::string probe;
            std::istringstream rescan(line);
            if (rescan >> probe) throw ParseError(line_no, "expected a vertex id");
            continue;
        }
        reject_trailing(ls, line_no);
        if (v < 1 || v > vertex_count) throw ParseError(line_no, "vertex id out of range");
        if (!out.empty() && v - 1 <= out.back())
            throw ParseError(line_no, "ids must be strictly ascending");
        out.push_back(static_cast<int>(v - 1));
    }
    return out;
}

void write_modulator(std::ostream& out, const std::vector<int>& modulator) {
    for (int v : modulator) out << v + 1 << "\n";
}

namespace {

// rng() scaled into [0, bound); multiply-shift keeps the result identical
// across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

}  // namespace

KernelInstance generate_instance(const GenSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (spec.k < 0 || spec.k > spec.n)
        throw std::invalid_argument("modulator size must lie in [0, n]");
    if (spec.q < 1) throw std::invalid_argument("q must be at least 1");
    for (double p : {spec.p_xx, spec.p_xr, spec.m_frac})
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("probabilities must lie in [0, 1]");

    std::mt19937_64 rng(spec.seed);
    // One draw per decision in a fixed traversal order; the dyadic scaling
    // avoids std::bernoulli_distribution, whose draw sequence is
    // implementation-defined.
    auto chance = [&rng](double p) { return (rng() >> 11) * 0x1.0p-53 < p; };

    Graph g(spec.n);
    for (int i = 0; i < spec.k; ++i)
        for (int j = i + 1; j < spec.k; ++j)
            if (chance(spec.p_xx)) g.add_edge(i, j);
    for (int i = 0; i < spec.k; ++i)
        for (int r = spec.k; r < spec.n; ++r)
            if (chance(spec.p_xr)) g.add_edge(i, r);

    std::vector<int> rest;
    for (int r = spec.k; r < spec.n; ++r) rest.push_back(r);
    for (std::size_t i = rest.size(); i > 1; --i)
        std::swap(rest[i - 1], rest[bounded(rng, i)]);
    const std::size_t matched =
        static_cast<std::size_t>(spec.m_frac * static_cast<double>(rest.size()));
    for (std::size_t t = 0; t + 1 < matched; t += 2) g.add_edge(rest[t], rest[t + 1]);

    std::vector<int> modulator;
    for (int v = 0; v < spec.k; ++v) modulator.push_back(v);
    KernelInstance inst{std::move(g), std::move(modulator), spec.q};
    validate_instance(inst.graph, inst.modulator);
    return inst;
}

}  // namespace colkern

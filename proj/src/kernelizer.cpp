#include "colkern/kernelizer.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "colkern/polyring.hpp"

namespace colkern {

namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& x) {
    std::vector<char> in_x(g.vertex_count(), 0);
    int prev = -1;
    for (int v : x) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("modulator vertex " + std::to_string(v) + " out of range");
        if (v <= prev) throw std::invalid_argument("modulator must be sorted and duplicate-free");
        prev = v;
        in_x[v] = 1;
    }
    return in_x;
}

int outside_degree(const Graph& g, const std::vector<char>& in_x, int v) {
    int d = 0;
    for (int w : g.neighbors(v))
        if (!in_x[w]) ++d;
    return d;
}

bool is_modulator(const Graph& g, const std::vector<char>& in_x) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_x[v] && outside_degree(g, in_x, v) >= 2) return false;
    return true;
}

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_index_subset(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Calls fn once per k-subset of pool, subsets in ascending lexicographic
// order (pool itself is ascending).
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, int k, Fn fn) {
    const int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        fn(subset);
        if (!next_index_subset(idx, n)) break;
    }
}

std::vector<int> neighbors_in(const Graph& g, const std::vector<char>& in_x, int v) {
    std::vector<int> r;
    for (int w : g.neighbors(v))
        if (in_x[w]) r.push_back(w);
    return r;
}

std::uint64_t pow_clamped(std::uint64_t base, std::uint32_t exp) {
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap;
        r *= base;
    }
    return r;
}

std::string join_ids(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

}  // namespace

void validate_instance(const Graph& g, const std::vector<int>& x) {
    const std::vector<char> in_x = membership(g, x);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_x[v]) continue;
        if (outside_degree(g, in_x, v) >= 2) throw NotAModulatorError(v);
    }
}

ModulatorResult find_modulator(const Graph& g, std::uint64_t limit, bool allow_greedy) {
    const int n = g.vertex_count();
    std::vector<char> in_x(n, 0);
    std::uint64_t examined = 0;
    bool exhausted = false;
    for (int s = 0; s <= n && !exhausted; ++s) {
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (examined == limit) {
                exhausted = true;
                break;
            }
            ++examined;
            std::fill(in_x.begin(), in_x.end(), 0);
            for (int v : idx) in_x[v] = 1;
            if (is_modulator(g, in_x)) return {idx, true};
            if (!next_index_subset(idx, n)) break;
        }
    }
    if (!allow_greedy) throw LimitExceededError();

    // Repeatedly absorb the vertex with the most neighbors outside the
    // modulator until no violation is left.
    std::fill(in_x.begin(), in_x.end(), 0);
    while (true) {
        int best = -1;
        int best_deg = 1;
        for (int v = 0; v < n; ++v) {
            if (in_x[v]) continue;
            const int d = outside_degree(g, in_x, v);
            if (d > best_deg) {
                best = v;
                best_deg = d;
            }
        }
        if (best < 0) break;
        in_x[best] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (in_x[v]) out.push_back(v);
    return {out, out.empty()};
}

std::vector<ConstraintTag> enumerate_constraints(const KernelInstance& inst) {
    validate_instance(inst.graph, inst.modulator);
    const Graph& g = inst.graph;
    const int q = inst.q;
    const std::vector<char> in_x = membership(g, inst.modulator);

    std::vector<ConstraintTag> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_x[v]) continue;
        const std::vector<int> nx = neighbors_in(g, in_x, v);
        for_each_subset(nx, q, [&](const std::vector<int>& s) {
            out.push_back(ConstraintTag{Type1Tag{v, s}});
        });
    }

    std::vector<std::pair<int, int>> oriented;
    for (const auto& [a, b] : g.edges()) {
        if (in_x[a] || in_x[b]) continue;
        oriented.emplace_back(a, b);
        oriented.emplace_back(b, a);
    }
    std::sort(oriented.begin(), oriented.end());
    for (const auto& [u1, u2] : oriented) {
        const std::vector<int> n1 = neighbors_in(g, in_x, u1);
        const std::vector<int> n2 = neighbors_in(g, in_x, u2);
        for_each_subset(n1, q - 1, [&](const std::vector<int>& s1) {
            for_each_subset(n2, q - 1, [&](const std::vector<int>& s2) {
                out.push_back(ConstraintTag{Type2Tag{u1, u2, s1, s2}});
            });
        });
    }
    return out;
}

KernelResult kernelize(const KernelInstance& inst, const Palette& palette) {
    if (inst.q < 3) throw std::invalid_argument("kernelization is defined for q >= 3");
    if (palette.q() != static_cast<std::uint32_t>(inst.q))
        throw std::invalid_argument("palette size does not match q");
    const Graph& g = inst.graph;
    const std::uint32_t q = static_cast<std::uint32_t>(inst.q);
    const std::vector<ConstraintTag> tags = enumerate_constraints(inst);
    const PrimeField& fld = palette.field();

    EchelonBasis basis1(fld);
    EchelonBasis basis2(fld);
    KernelStats stats;
    for (const ConstraintTag& tag : tags) {
        if (tag.is_type1()) {
            ++stats.p1_total;
            std::vector<ColumnSpec> cols;
            for (int z : tag.type1().s) cols.emplace_back(z);
            basis1.insert(build_f(q, palette, cols), tag);
        } else {
            ++stats.p2_total;
            basis2.insert(build_h(q, palette, tag.type2().s1, tag.type2().s2), tag);
        }
    }
    stats.p1_basis = basis1.size();
    stats.p2_basis = basis2.size();

    // Rebuild the graph from G[X] plus one gadget per retained tag.
    std::set<int> kept_set(inst.modulator.begin(), inst.modulator.end());
    std::vector<std::pair<int, int>> gadget_edges;
    auto add_gadget_edge = [&](int a, int b) {
        if (!g.has_edge(a, b))
            throw std::logic_error("retained constraint references a non-edge");
        gadget_edges.emplace_back(a, b);
    };
    for (std::size_t i = 0; i < basis1.size(); ++i) {
        const Type1Tag& t = basis1.row_tag(i).type1();
        kept_set.insert(t.v);
        for (int z : t.s) add_gadget_edge(t.v, z);
    }
    for (std::size_t i = 0; i < basis2.size(); ++i) {
        const Type2Tag& t = basis2.row_tag(i).type2();
        kept_set.insert(t.u1);
        kept_set.insert(t.u2);
        add_gadget_edge(t.u1, t.u2);
        for (int z : t.s1) add_gadget_edge(t.u1, z);
        for (int z : t.s2) add_gadget_edge(t.u2, z);
    }

    const std::vector<int> kept(kept_set.begin(), kept_set.end());
    std::map<int, int> to_new;
    for (std::size_t i = 0; i < kept.size(); ++i) to_new[kept[i]] = static_cast<int>(i);

    Graph reduced(static_cast<int>(kept.size()));
    for (const auto& [a, b] : g.edges())
        if (std::binary_search(inst.modulator.begin(), inst.modulator.end(), a) &&
            std::binary_search(inst.modulator.begin(), inst.modulator.end(), b))
            reduced.add_edge(to_new[a], to_new[b]);
    for (const auto& [a, b] : gadget_edges) reduced.add_edge(to_new[a], to_new[b]);

    std::vector<int> new_modulator;
    for (int v : inst.modulator) new_modulator.push_back(to_new[v]);

    stats.kernel_vertices = reduced.vertex_count();
    stats.kernel_edges = reduced.edge_count();
    const std::uint64_t id_bits =
        std::bit_width(std::max<std::uint64_t>(stats.kernel_vertices, 2) - 1);
    stats.kernel_bits = 2 * static_cast<std::uint64_t>(stats.kernel_edges) * id_bits;

    // Proven size bounds; a violation indicates a defect, not bad input.
    const std::uint64_t k = inst.modulator.size();
    if (stats.p1_basis > pow_clamped(q * k, q - 1) + 1)
        throw std::logic_error("retained vertex-constraint count exceeds its bound");
    if (stats.p2_basis > pow_clamped(q * k, 2 * q - 3) + 1)
        throw std::logic_error("retained edge-constraint count exceeds its bound");
    if (stats.kernel_vertices > k + stats.p1_basis + 2 * stats.p2_basis)
        throw std::logic_error("kernel vertex count exceeds its bound");
    if (stats.kernel_edges > k * (k - 1) / 2 + q * stats.p1_basis + (2 * q - 1) * stats.p2_basis)
        throw std::logic_error("kernel edge count exceeds its bound");
    validate_instance(reduced, new_modulator);

    return {std::move(reduced), kept, std::move(new_modulator), stats};
}

namespace {

// Colors on v's modulator neighborhood, one witness vertex per color in
// ascending id order.
std::map<int, int> color_representatives(const Graph& g, const std::vector<char>& in_x,
                                         const ModulatorColoring& coloring, int v) {
    std::map<int, int> rep;
    for (int w : g.neighbors(v)) {
        if (!in_x[w]) continue;
        rep.emplace(coloring.at(w), w);
    }
    return rep;
}

void validate_coloring(const KernelInstance& inst, const ModulatorColoring& coloring,
                       const std::vector<char>& in_x) {
    for (const auto& [v, col] : coloring) {
        if (v < 0 || v >= inst.graph.vertex_count() || !in_x[v])
            throw std::invalid_argument("coloring mentions vertex " + std::to_string(v) +
                                        " outside the modulator");
        if (col < 0 || col >= inst.q)
            throw std::invalid_argument("color " + std::to_string(col) + " out of range");
    }
    for (int v : inst.modulator)
        if (!coloring.count(v))
            throw std::invalid_argument("coloring misses modulator vertex " + std::to_string(v));
    for (int u : inst.modulator)
        for (int w : inst.graph.neighbors(u))
            if (w > u && in_x[w] && coloring.at(u) == coloring.at(w))
                throw ImproperColoringError(u, w);
}

}  // namespace

ExtensionReport check_extension_conditions(const KernelInstance& inst,
                                           const ModulatorColoring& coloring) {
    validate_instance(inst.graph, inst.modulator);
    const Graph& g = inst.graph;
    const int q = inst.q;
    const std::vector<char> in_x = membership(g, inst.modulator);
    validate_coloring(inst, coloring, in_x);

    // Condition 1 fails at v iff q modulator neighbors of v carry q
    // pairwise distinct colors.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_x[v]) continue;
        const std::map<int, int> rep = color_representatives(g, in_x, coloring, v);
        if (static_cast<int>(rep.size()) < q) continue;
        std::vector<int> witness;
        for (const auto& [col, w] : rep) {
            witness.push_back(w);
            if (static_cast<int>(witness.size()) == q) break;
        }
        std::sort(witness.begin(), witness.end());
        return {false, "vertex " + std::to_string(v) + " sees " + std::to_string(q) +
                           " distinct colors on S=" + join_ids(witness)};
    }

    // Condition 2 fails at an edge iff q-1 colors appear on both endpoints'
    // modulator neighborhoods: picking representatives on each side yields
    // S1 with distinct colors and S2 with the same color set.
    for (const auto& [a, b] : g.edges()) {
        if (in_x[a] || in_x[b]) continue;
        const std::map<int, int> rep1 = color_representatives(g, in_x, coloring, a);
        const std::map<int, int> rep2 = color_representatives(g, in_x, coloring, b);
        std::vector<int> s1, s2;
        for (const auto& [col, w] : rep1) {
            auto it = rep2.find(col);
            if (it == rep2.end()) continue;
            s1.push_back(w);
            s2.push_back(it->second);
            if (static_cast<int>(s1.size()) == q - 1) break;
        }
        if (static_cast<int>(s1.size()) < q - 1) continue;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        return {false, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                           ") admits equally colored S1=" + join_ids(s1) +
                           " and S2=" + join_ids(s2)};
    }
    return {};
}

std::optional<std::vector<int>> extend_coloring(const KernelInstance& inst,
                                                const ModulatorColoring& coloring) {
    try {
        if (!check_extension_conditions(inst, coloring).ok) return std::nullopt;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    const Graph& g = inst.graph;
    const int q = inst.q;
    const std::vector<char> in_x = membership(g, inst.modulator);

    std::vector<int> full(g.vertex_count(), -1);
    for (const auto& [v, col] : coloring) full[v] = col;

    auto free_colors = [&](int v) {
        std::vector<char> used(q, 0);
        for (int w : g.neighbors(v))
            if (in_x[w]) used[full[w]] = 1;
        std::vector<int> r;
        for (int c = 0; c < q; ++c)
            if (!used[c]) r.push_back(c);
        return r;
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_x[v] || full[v] >= 0) continue;
        int partner = -1;
        for (int w : g.neighbors(v))
            if (!in_x[w]) partner = w;
        const std::vector<int> free1 = free_colors(v);
        if (partner < 0) {
            if (free1.empty()) return std::nullopt;
            full[v] = free1.front();
            continue;
        }
        const std::vector<int> free2 = free_colors(partner);
        bool placed = false;
        for (int c1 : free1) {
            for (int c2 : free2) {
                if (c1 == c2) continue;
                full[v] = c1;
                full[partner] = c2;
                placed = true;
                break;
            }
            if (placed) break;
        }
        if (!placed) return std::nullopt;
    }
    return full;
}

}  // namespace colkern

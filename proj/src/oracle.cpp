#include "colkern/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace colkern {

namespace {

std::uint64_t pow_clamped(std::uint64_t base, std::uint64_t exp) {
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap;
        r *= base;
    }
    return r;
}

bool proper(const Graph& g, const std::vector<int>& colors) {
    for (const auto& [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

}  // namespace

ColoringWitness is_q_colorable(const Graph& g, int q, int size_limit) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    const int n = g.vertex_count();
    if (n > size_limit)
        throw SizeLimitError("graph has " + std::to_string(n) +
                             " vertices, exhaustive search capped at " +
                             std::to_string(size_limit));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<int> colors(n, -1);
    // Colors are interchangeable, so vertex i may open at most one color
    // beyond those already in use.
    auto search = [&](auto&& self, int pos, int used) -> bool {
        if (pos == n) return true;
        const int v = order[pos];
        const int cap = std::min(used + 1, q);
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (colors[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colors[v] = c;
            if (self(self, pos + 1, std::max(used, c + 1))) return true;
            colors[v] = -1;
        }
        return false;
    };
    if (!search(search, 0, 0)) return {};
    if (!proper(g, colors)) throw std::logic_error("search returned an improper coloring");
    return {colors};
}

bool extension_equivalence(const KernelInstance& inst, std::uint64_t limit) {
    validate_instance(inst.graph, inst.modulator);
    const std::uint64_t k = inst.modulator.size();
    const std::uint64_t q = static_cast<std::uint64_t>(inst.q);
    if (pow_clamped(q, k) > limit)
        throw SizeLimitError("q^k modulator colorings exceed the enumeration cap");

    bool extendable = false;
    std::vector<int> digits(k, 0);
    while (true) {
        ModulatorColoring c;
        for (std::size_t i = 0; i < k; ++i) c[inst.modulator[i]] = digits[i];
        bool proper_on_x = true;
        for (int u : inst.modulator) {
            for (int w : inst.graph.neighbors(u))
                if (w > u && c.count(w) && c[u] == c[w]) proper_on_x = false;
        }
        if (proper_on_x && check_extension_conditions(inst, c).ok) {
            extendable = true;
            break;
        }
        std::size_t i = 0;
        while (i < k && digits[i] == inst.q - 1) digits[i++] = 0;
        if (i == k) break;
        ++digits[i];
    }

    const bool colorable = is_q_colorable(inst.graph, inst.q).colorable();
    return extendable == colorable;
}

void enumerate_colored_matrices(const Palette& p, int cols,
                                const std::function<void(const Matrix&, const std::vector<int>&)>& fn,
                                std::uint64_t limit) {
    if (cols < 1) throw std::invalid_argument("column count must be positive");
    const std::uint32_t q = p.q();
    if (pow_clamped(q, static_cast<std::uint64_t>(cols)) > limit)
        throw SizeLimitError("q^cols matrices exceed the enumeration cap");

    std::vector<int> idx(cols, 0);
    while (true) {
        Matrix m(p.field(), q, static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) {
            const std::vector<FieldElement> col = p.column(static_cast<std::size_t>(idx[j]));
            for (std::uint32_t i = 0; i < q; ++i) m.set(i, static_cast<std::size_t>(j), col[i]);
        }
        fn(m, idx);
        // Odometer with the LAST index least significant keeps the tuples
        // in lexicographic order.
        int j = cols - 1;
        while (j >= 0 && idx[j] == static_cast<int>(q) - 1) idx[j--] = 0;
        if (j < 0) break;
        ++idx[j];
    }
}

}  // namespace colkern

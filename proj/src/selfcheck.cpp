#include "colkern/selfcheck.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "colkern/oracle.hpp"
#include "colkern/palette.hpp"
#include "colkern/polyring.hpp"

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

std::string gen_desc(const GenSpec& s) {
    std::ostringstream os;
    os << "n=" << s.n << " k=" << s.k << " q=" << s.q << " p_xx=" << s.p_xx
       << " p_xr=" << s.p_xr << " m_frac=" << s.m_frac << " seed=" << s.seed;
    return os.str();
}

std::string join_indices(const std::vector<int>& idx) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << ")";
    return os.str();
}

// Block ids 1..cols mapped onto the matrix columns.
ColorAssignment matrix_assignment(const Matrix& m) {
    ColorAssignment a;
    for (std::size_t j = 0; j < m.cols(); ++j) a[static_cast<int>(j) + 1] = m.column(j);
    return a;
}

bool has_duplicate(const std::vector<int>& idx, std::size_t from, std::size_t count) {
    for (std::size_t i = from; i < from + count; ++i)
        for (std::size_t j = i + 1; j < from + count; ++j)
            if (idx[i] == idx[j]) return true;
    return false;
}

bool same_index_set(const std::vector<int>& idx, std::size_t split) {
    const std::set<int> a(idx.begin(), idx.begin() + static_cast<long>(split));
    const std::set<int> b(idx.begin() + static_cast<long>(split), idx.end());
    return a == b;
}

std::vector<int> iota_blocks(int from, int count) {
    std::vector<int> r;
    for (int i = 0; i < count; ++i) r.push_back(from + i);
    return r;
}

struct PaletteCase {
    std::string label;
    Palette pal;
};

std::vector<PaletteCase> pattern_palettes(std::uint32_t q) {
    std::vector<PaletteCase> out;
    out.push_back({"alpha@GF(3)", construct_palette(q, PrimeField(3))});
    // The power construction needs at least q field elements.
    const std::uint32_t p = q <= 3 ? 3 : 5;
    out.push_back({"vandermonde@GF(" + std::to_string(p) + ")",
                   construct_vandermonde(q, PrimeField(p))});
    return out;
}

std::optional<ModulatorColoring> find_extendable_coloring(const KernelInstance& inst) {
    const std::size_t k = inst.modulator.size();
    std::vector<int> digits(k, 0);
    while (true) {
        ModulatorColoring c;
        for (std::size_t i = 0; i < k; ++i) c[inst.modulator[i]] = digits[i];
        bool proper_on_x = true;
        for (int u : inst.modulator)
            for (int w : inst.graph.neighbors(u))
                if (w > u && c.count(w) && c[u] == c[w]) proper_on_x = false;
        if (proper_on_x && check_extension_conditions(inst, c).ok) return c;
        std::size_t i = 0;
        while (i < k && digits[i] == inst.q - 1) digits[i++] = 0;
        if (i == k) return std::nullopt;
        ++digits[i];
    }
}

}  // namespace

GenSpec trial_spec(const TrialPlan& plan, int t, std::uint64_t seed) {
    static const double densities[3] = {0.2, 0.5, 0.8};
    static const double fracs[3] = {0.3, 0.6, 1.0};
    GenSpec s;
    s.q = plan.q;
    s.n = plan.max_n - t % 4;
    s.k = t % (plan.max_k + 1);
    s.p_xx = densities[t % 3];
    s.p_xr = densities[(t / 3) % 3];
    s.m_frac = fracs[(t / 9) % 3];
    s.seed = seed + 1000003ull * static_cast<std::uint64_t>(plan.q) +
             static_cast<std::uint64_t>(t);
    return s;
}

std::vector<TrialPlan> default_trial_plans() { return {{3, 200, 14, 6}, {4, 100, 12, 5}}; }

CheckResult check_palette_table() {
    CheckResult r{"palette_existence_table", true, ""};
    int cases = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField f(p);
        for (std::uint32_t q = 2; q <= 8; ++q) {
            const bool expect = q % 2 == 0 || p >= 3;
            bool got = false;
            try {
                const Palette pal = construct_palette(q, f);
                got = verify_palette(pal.columns()).pass();
            } catch (const NoValidAlphaError&) {
                got = false;
            }
            ++cases;
            if (got != expect) {
                r.pass = false;
                r.detail = "q=" + std::to_string(q) + " p=" + std::to_string(p) +
                           ": construction " + (got ? "succeeded" : "failed") +
                           ", expected the opposite";
                return r;
            }
        }
    }

    // No triple of vectors in GF(2)^3 verifies: brute force over all
    // unordered candidate triples.
    const PrimeField f2(2);
    int triples = 0;
    for (int a = 0; a < 8; ++a) {
        for (int b = a + 1; b < 8; ++b) {
            for (int c = b + 1; c < 8; ++c) {
                Matrix m(f2, 3, 3);
                const int cols[3] = {a, b, c};
                for (std::size_t j = 0; j < 3; ++j)
                    for (std::size_t i = 0; i < 3; ++i)
                        m.set(i, j, f2.element((cols[j] >> i) & 1));
                ++triples;
                if (verify_palette(m).pass()) {
                    r.pass = false;
                    r.detail = "candidate triple " + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) +
                               " verified over GF(2) at q=3";
                    return r;
                }
            }
        }
    }
    r.detail = std::to_string(cases) + " (q,p) cases; " + std::to_string(triples) +
               " exhaustive GF(2) triples rejected";
    return r;
}

CheckResult check_zero_patterns() {
    CheckResult r{"polynomial_zero_patterns", true, ""};
    std::uint64_t checked = 0;
    for (std::uint32_t q : {3u, 4u}) {
        for (const PaletteCase& pc : pattern_palettes(q)) {
            const int qi = static_cast<int>(q);
            std::vector<ColumnSpec> fcols;
            for (int v : iota_blocks(1, qi)) fcols.emplace_back(v);
            const Poly f = build_f(q, pc.pal, fcols);
            const Poly g = build_g(q, pc.pal, iota_blocks(1, qi - 1));
            const Poly h = build_h(q, pc.pal, iota_blocks(1, qi - 1), iota_blocks(qi, qi - 1));

            auto scan = [&](const Poly& poly, int cols, auto expect_zero, const char* name) {
                enumerate_colored_matrices(pc.pal, cols, [&](const Matrix& m,
                                                             const std::vector<int>& idx) {
                    ++checked;
                    if (!r.pass) return;
                    const bool zero = poly_eval(poly, matrix_assignment(m)).is_zero();
                    if (zero != expect_zero(idx)) {
                        r.pass = false;
                        r.detail = std::string(name) + " at q=" + std::to_string(q) + " " +
                                   pc.label + " columns " + join_indices(idx) + ": evaluated " +
                                   (zero ? "zero" : "nonzero") + ", pattern says otherwise";
                    }
                });
            };
            scan(f, qi,
                 [&](const std::vector<int>& idx) { return has_duplicate(idx, 0, idx.size()); },
                 "f");
            scan(g, qi - 1,
                 [&](const std::vector<int>& idx) { return has_duplicate(idx, 0, idx.size()); },
                 "g");
            scan(h, 2 * qi - 2,
                 [&](const std::vector<int>& idx) {
                     const std::size_t half = idx.size() / 2;
                     return has_duplicate(idx, 0, half) || !same_index_set(idx, half);
                 },
                 "h");
            if (!r.pass) return r;
        }
    }
    r.detail = std::to_string(checked) + " colored matrices scanned";
    return r;
}

CheckResult check_degree_identities() {
    CheckResult r{"degree_identities", true, ""};
    int cases = 0;
    for (std::uint32_t q : {3u, 4u, 5u}) {
        std::vector<PaletteCase> pals;
        pals.push_back({"alpha@GF(3)", construct_palette(q, PrimeField(3))});
        pals.push_back({"vandermonde@GF(5)", construct_vandermonde(q, PrimeField(5))});
        for (const PaletteCase& pc : pals) {
            const int qi = static_cast<int>(q);
            std::vector<ColumnSpec> fcols;
            for (int v : iota_blocks(1, qi)) fcols.emplace_back(v);
            const Poly f = build_f(q, pc.pal, fcols);
            const Poly g = build_g(q, pc.pal, iota_blocks(1, qi - 1));
            const Poly h = build_h(q, pc.pal, iota_blocks(1, qi - 1), iota_blocks(qi, qi - 1));
            const bool ok = !f.is_zero() && f.degree() == q - 1 && !g.is_zero() &&
                            g.degree() == q - 2 && !h.is_zero() && h.degree() == 2 * q - 3;
            ++cases;
            if (!ok) {
                r.pass = false;
                r.detail = "q=" + std::to_string(q) + " " + pc.label + ": degrees " +
                           std::to_string(f.degree()) + "/" + std::to_string(g.degree()) + "/" +
                           std::to_string(h.degree()) + ", wanted " + std::to_string(q - 1) +
                           "/" + std::to_string(q - 2) + "/" + std::to_string(2 * q - 3);
                return r;
            }
        }
    }
    r.detail = std::to_string(cases) + " (q, palette) cases";
    return r;
}

CheckResult check_kernel_equivalence(const std::vector<TrialPlan>& plans, std::uint64_t seed) {
    CheckResult r{"kernel_equivalence", true, ""};
    std::ostringstream summary;
    for (const TrialPlan& plan : plans) {
        const Palette pal = construct_palette(static_cast<std::uint32_t>(plan.q), PrimeField(3));
        int agree = 0;
        for (int t = 0; t < plan.trials; ++t) {
            const GenSpec s = trial_spec(plan, t, seed);
            const KernelInstance inst = generate_instance(s);
            const KernelResult kr = kernelize(inst, pal);
            const bool before = is_q_colorable(inst.graph, plan.q).colorable();
            const bool after = is_q_colorable(kr.reduced, plan.q).colorable();
            if (before != after) {
                r.pass = false;
                r.detail = "disagreement at trial " + std::to_string(t) + " (" + gen_desc(s) +
                           "): input " + (before ? "colorable" : "uncolorable") + ", kernel " +
                           (after ? "colorable" : "uncolorable");
                return r;
            }
            ++agree;
        }
        summary << (summary.tellp() > 0 ? " " : "") << "q=" << plan.q << ":" << agree << "/"
                << plan.trials;
    }
    r.detail = summary.str();
    return r;
}

CheckResult check_size_bounds(const std::vector<TrialPlan>& plans, std::uint64_t seed) {
    CheckResult r{"kernel_size_bounds", true, ""};
    int instances = 0;
    for (const TrialPlan& plan : plans) {
        const std::uint64_t q = static_cast<std::uint64_t>(plan.q);
        const Palette pal = construct_palette(static_cast<std::uint32_t>(plan.q), PrimeField(3));
        for (int t = 0; t < plan.trials; ++t) {
            const GenSpec s = trial_spec(plan, t, seed);
            const KernelInstance inst = generate_instance(s);
            const KernelResult kr = kernelize(inst, pal);
            const KernelStats& st = kr.stats;
            const std::uint64_t k = inst.modulator.size();
            std::string broken;
            if (st.p1_basis > st.p1_total || st.p2_basis > st.p2_total)
                broken = "basis larger than the enumerated family";
            else if (st.p1_basis > pow_clamped(q * k, q - 1) + 1)
                broken = "p1_basis bound";
            else if (st.p2_basis > pow_clamped(q * k, 2 * q - 3) + 1)
                broken = "p2_basis bound";
            else if (st.kernel_vertices > k + st.p1_basis + 2 * st.p2_basis)
                broken = "vertex bound";
            else if (st.kernel_edges > k * (k - 1) / 2 + q * st.p1_basis + (2 * q - 1) * st.p2_basis)
                broken = "edge bound";
            if (broken.empty()) {
                for (const auto& [a, b] : kr.reduced.edges())
                    if (!inst.graph.has_edge(kr.kept[static_cast<std::size_t>(a)],
                                             kr.kept[static_cast<std::size_t>(b)]))
                        broken = "kernel is not a subgraph";
            }
            if (!broken.empty()) {
                r.pass = false;
                r.detail = broken + " at trial " + std::to_string(t) + " (" + gen_desc(s) + ")";
                return r;
            }
            ++instances;
        }
    }
    r.detail = std::to_string(instances) + " kernels within bounds";
    return r;
}

CheckResult check_extension_suite(int trials, std::uint64_t seed) {
    CheckResult r{"extension_characterization", true, ""};
    const TrialPlan plan{3, trials, 12, 5};
    int equivalences = 0;
    int extensions = 0;
    for (int t = 0; t < trials; ++t) {
        const GenSpec s = trial_spec(plan, t, seed + 777);
        const KernelInstance inst = generate_instance(s);
        if (!extension_equivalence(inst)) {
            r.pass = false;
            r.detail = "characterization failed (" + gen_desc(s) + ")";
            return r;
        }
        ++equivalences;
        const std::optional<ModulatorColoring> c = find_extendable_coloring(inst);
        if (!c) continue;
        const std::optional<std::vector<int>> full = extend_coloring(inst, *c);
        std::string broken;
        if (!full) {
            broken = "extension absent despite satisfied conditions";
        } else {
            for (int v = 0; v < inst.graph.vertex_count(); ++v)
                if ((*full)[v] < 0 || (*full)[v] >= inst.q) broken = "color out of range";
            for (const auto& [u, v] : inst.graph.edges())
                if ((*full)[u] == (*full)[v]) broken = "monochromatic edge";
            for (const auto& [v, col] : *c)
                if ((*full)[v] != col) broken = "extension disagrees on the modulator";
        }
        if (!broken.empty()) {
            r.pass = false;
            r.detail = broken + " (" + gen_desc(s) + ")";
            return r;
        }
        ++extensions;
    }
    r.detail = std::to_string(equivalences) + " equivalences, " + std::to_string(extensions) +
               " verified extensions";
    return r;
}

CheckResult check_truncated_system() {
    CheckResult r{"truncated_system_solution", true, ""};
    int cases = 0;
    for (std::uint32_t p : {3u, 5u}) {
        const PrimeField f(p);
        for (std::uint32_t q : {3u, 4u, 5u}) {
            const FieldElement forbidden = f.element(4 - static_cast<std::int64_t>(q));
            for (std::uint32_t a = 1; a < p; ++a) {
                const FieldElement alpha = f.element(a);
                if (alpha == forbidden) continue;
                const Palette pal = construct_palette(q, f, alpha);
                Matrix d(f, q - 1, q - 1);
                for (std::size_t j = 0; j + 1 < q; ++j) {
                    const std::vector<FieldElement> col = pal.column(j);
                    for (std::size_t i = 0; i + 1 < q; ++i) d.set(i, j, col[i]);
                }
                const std::vector<FieldElement> last = pal.column(q - 1);
                const std::vector<FieldElement> b(last.begin(), last.end() - 1);
                const std::vector<FieldElement> x = solve_unique(d, b);
                std::vector<FieldElement> want;
                want.push_back(f.element(4 - static_cast<std::int64_t>(q)) - alpha);
                want.push_back(alpha);
                for (std::uint32_t i = 2; i + 1 < q; ++i) want.push_back(f.one());
                bool ok = x == want;
                for (const FieldElement& e : x)
                    if (e.is_zero()) ok = false;
                ++cases;
                if (!ok) {
                    r.pass = false;
                    r.detail = "q=" + std::to_string(q) + " p=" + std::to_string(p) +
                               " alpha=" + std::to_string(a) + ": wrong or degenerate solution";
                    return r;
                }
            }
        }
    }
    r.detail = std::to_string(cases) + " (q, p, alpha) systems solved";
    return r;
}

std::vector<CheckResult> run_selfchecks(const std::vector<TrialPlan>& plans,
                                        int extension_trials, std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_palette_table());
    out.push_back(check_zero_patterns());
    out.push_back(check_degree_identities());
    bool any_trials = false;
    for (const TrialPlan& plan : plans)
        if (plan.trials > 0) any_trials = true;
    if (any_trials) {
        out.push_back(check_kernel_equivalence(plans, seed));
        out.push_back(check_size_bounds(plans, seed));
    }
    if (extension_trials > 0) out.push_back(check_extension_suite(extension_trials, seed));
    out.push_back(check_truncated_system());
    return out;
}

}  // namespace colkern

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "colkern/instance_io.hpp"
#include "colkern/kernelizer.hpp"
#include "colkern/oracle.hpp"
#include "colkern/palette.hpp"
#include "colkern/polyring.hpp"
#include "colkern/selfcheck.hpp"

namespace {

using namespace colkern;

// Exit codes: 0 ok, 1 selftest failure, 2 bad input, 3 not a modulator,
// 4 kernel/original disagree, 5 oracle size limit, 6 no palette exists.

struct PaletteOpts {
    std::uint32_t q = 3;
    std::uint32_t field = 3;
    std::string variant = "alpha";
    std::optional<std::int64_t> alpha;
};

Palette make_palette(const PaletteOpts& o) {
    const PrimeField f(o.field);
    if (o.variant == "vandermonde") {
        if (o.alpha) throw std::invalid_argument("--alpha applies to the alpha construction only");
        return construct_vandermonde(o.q, f);
    }
    if (o.alpha) return construct_palette(o.q, f, f.element(*o.alpha));
    return construct_palette(o.q, f);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    return out;
}

template <typename Fn>
int guarded(Fn fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NotAModulatorError& e) {
        std::cerr << "modulator error: " << e.what() << "\n";
        return 3;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 5;
    } catch (const NoValidAlphaError& e) {
        std::cerr << "no q-palette exists: " << e.what() << "\n";
        return 6;
    } catch (const FieldTooSmallError& e) {
        std::cerr << "no q-palette of this kind exists: " << e.what() << "\n";
        return 6;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

struct KernelizeOpts {
    std::string input;
    std::string output;
    std::string modulator_path;
    bool auto_modulator = false;
    PaletteOpts palette;
};

int run_kernelize(const KernelizeOpts& o) {
    std::ifstream in = open_input(o.input);
    Graph g = parse_dimacs(in);

    std::vector<int> x;
    if (o.auto_modulator) {
        x = find_modulator(g).vertices;
    } else {
        const std::string path = o.modulator_path.empty() ? o.input + ".mod" : o.modulator_path;
        std::ifstream min = open_input(path);
        x = parse_modulator(min, g.vertex_count());
    }

    const Palette pal = make_palette(o.palette);
    const KernelInstance inst{std::move(g), std::move(x), static_cast<int>(o.palette.q)};
    const KernelResult kr = kernelize(inst, pal);

    std::ofstream out = open_output(o.output);
    write_dimacs(out, kr.reduced);
    std::ofstream mout = open_output(o.output + ".mod");
    write_modulator(mout, kr.modulator);

    std::cout << "p1_total " << kr.stats.p1_total << "\n"
              << "p1_basis " << kr.stats.p1_basis << "\n"
              << "p2_total " << kr.stats.p2_total << "\n"
              << "p2_basis " << kr.stats.p2_basis << "\n"
              << "kernel_vertices " << kr.stats.kernel_vertices << "\n"
              << "kernel_edges " << kr.stats.kernel_edges << "\n"
              << "kernel_bits " << kr.stats.kernel_bits << "\n";
    return 0;
}

struct VerifyOpts {
    std::string original;
    std::string kernel;
    int q = 3;
};

void print_verdict(const std::string& label, const ColoringWitness& w) {
    std::cout << label << ": " << (w.colorable() ? "colorable" : "not colorable");
    if (w.colorable()) {
        std::cout << " witness";
        for (int c : *w.assignment) std::cout << " " << c;
    }
    std::cout << "\n";
}

int run_verify(const VerifyOpts& o) {
    std::ifstream in1 = open_input(o.original);
    const Graph g1 = parse_dimacs(in1);
    std::ifstream in2 = open_input(o.kernel);
    const Graph g2 = parse_dimacs(in2);
    const ColoringWitness w1 = is_q_colorable(g1, o.q);
    const ColoringWitness w2 = is_q_colorable(g2, o.q);
    print_verdict("original", w1);
    print_verdict("kernel", w2);
    if (w1.colorable() != w2.colorable()) {
        std::cout << "verdict disagree\n";
        return 4;
    }
    std::cout << "verdict agree\n";
    return 0;
}

struct GenOpts {
    GenSpec spec;
    std::string output;
};

int run_gen(const GenOpts& o) {
    const KernelInstance inst = generate_instance(o.spec);
    std::ofstream out = open_output(o.output);
    write_dimacs(out, inst.graph);
    std::ofstream mout = open_output(o.output + ".mod");
    write_modulator(mout, inst.modulator);
    return 0;
}

int run_palette(const PaletteOpts& o) {
    const Palette pal = make_palette(o);
    std::cout << pal.to_string();
    const PaletteReport rep = verify_palette(pal.columns());
    std::cout << "first_entries " << (rep.first_entries_ok ? "ok" : "bad") << "\n"
              << "independent " << (rep.independent_ok ? "ok" : "bad") << "\n"
              << "truncations " << (rep.truncations_ok ? "ok" : "bad") << "\n"
              << "verdict " << (rep.pass() ? "pass" : "fail") << "\n";
    return rep.pass() ? 0 : 6;
}

struct SelftestOpts {
    int trials = 200;
    int q_min = 3;
    int q_max = 4;
    std::uint64_t seed = 1;
    bool verbose = false;
};

void print_poly_debug() {
    const Palette pal = construct_palette(3, PrimeField(3));
    std::cout << "palette q=3 over GF(3):\n" << pal.to_string();
    const std::vector<ColumnSpec> cols{1, 2, 3};
    std::cout << "f = " << build_f(3, pal, cols).to_string() << "\n";
    std::cout << "g = " << build_g(3, pal, {1, 2}).to_string() << "\n";
    std::cout << "h = " << build_h(3, pal, {1, 2}, {3, 4}).to_string() << "\n";
}

int run_selftest(const SelftestOpts& o) {
    if (o.q_min < 3 || o.q_max > 4 || o.q_min > o.q_max)
        throw std::invalid_argument("supported selftest q range is [3, 4]");
    if (o.trials < 0) throw std::invalid_argument("trials must be nonnegative");
    if (o.verbose) print_poly_debug();

    std::vector<TrialPlan> plans;
    if (o.trials > 0) {
        for (const TrialPlan& base : default_trial_plans()) {
            if (base.q < o.q_min || base.q > o.q_max) continue;
            TrialPlan plan = base;
            plan.trials = base.q == 3 ? o.trials : std::max(o.trials / 2, 1);
            plans.push_back(plan);
        }
    }
    const std::vector<CheckResult> results =
        run_selfchecks(plans, o.trials > 0 ? std::max(o.trials / 2, 1) : 0, o.seed);

    std::size_t passed = 0;
    for (const CheckResult& res : results) {
        std::ostringstream line;
        line << (res.pass ? "PASS " : "FAIL ") << res.name;
        if (!res.detail.empty()) line << " (" << res.detail << ")";
        std::cout << line.str() << "\n";
        if (res.pass) ++passed;
    }
    std::cout << "passed " << passed << "/" << results.size() << "\n";
    return passed == results.size() ? 0 : 1;
}

void add_palette_flags(CLI::App* cmd, PaletteOpts& o) {
    cmd->add_option("--q", o.q, "number of colors")->required()->check(CLI::Range(2u, 16u));
    cmd->add_option("--field", o.field, "prime field order")->capture_default_str();
    cmd->add_option("--palette", o.variant, "palette construction")
        ->check(CLI::IsMember({"alpha", "vandermonde"}))
        ->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "override the alpha parameter");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-coloring kernelization for graphs that are a matching plus k vertices"};
    app.require_subcommand(1);

    KernelizeOpts ko;
    CLI::App* kcmd = app.add_subcommand("kernelize", "reduce an instance to an equivalent kernel");
    kcmd->add_option("input", ko.input, "DIMACS graph file")->required();
    kcmd->add_option("-o,--output", ko.output, "kernel DIMACS path")->required();
    kcmd->add_option("--modulator", ko.modulator_path, "modulator sidecar (default <input>.mod)");
    kcmd->add_flag("--auto-modulator", ko.auto_modulator, "search for a modulator instead");
    add_palette_flags(kcmd, ko.palette);

    VerifyOpts vo;
    CLI::App* vcmd = app.add_subcommand("verify", "compare colorability of two instances");
    vcmd->add_option("original", vo.original, "original DIMACS graph")->required();
    vcmd->add_option("kernel", vo.kernel, "kernel DIMACS graph")->required();
    vcmd->add_option("--q", vo.q, "number of colors")->required()->check(CLI::Range(1, 16));

    GenOpts go;
    CLI::App* gcmd = app.add_subcommand("gen", "generate a random instance");
    gcmd->add_option("-o,--output", go.output, "DIMACS output path")->required();
    gcmd->add_option("--n", go.spec.n, "vertex count")->required();
    gcmd->add_option("--k", go.spec.k, "modulator size")->required();
    gcmd->add_option("--q", go.spec.q, "number of colors")->capture_default_str();
    gcmd->add_option("--p-xx", go.spec.p_xx, "edge probability inside the modulator")
        ->capture_default_str();
    gcmd->add_option("--p-xr", go.spec.p_xr, "modulator-to-rest edge probability")
        ->capture_default_str();
    gcmd->add_option("--m-frac", go.spec.m_frac, "fraction of rest vertices matched")
        ->capture_default_str();
    gcmd->add_option("--seed", go.spec.seed, "generator seed")->capture_default_str();

    PaletteOpts po;
    CLI::App* pcmd = app.add_subcommand("palette", "print and verify a palette");
    add_palette_flags(pcmd, po);

    SelftestOpts so;
    CLI::App* scmd = app.add_subcommand("selftest", "run the built-in check suite");
    scmd->add_option("--trials", so.trials, "random trials at q=3, half at q=4")
        ->capture_default_str();
    scmd->add_option("--q-min", so.q_min, "smallest q for random trials")->capture_default_str();
    scmd->add_option("--q-max", so.q_max, "largest q for random trials")->capture_default_str();
    scmd->add_option("--seed", so.seed, "trial seed")->capture_default_str();
    scmd->add_flag("-v,--verbose", so.verbose, "print palettes and polynomials first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*kcmd) return guarded([&] { return run_kernelize(ko); });
    if (*vcmd) return guarded([&] { return run_verify(vo); });
    if (*gcmd) return guarded([&] { return run_gen(go); });
    if (*pcmd) return guarded([&] { return run_palette(po); });
    return guarded([&] { return run_selftest(so); });
}

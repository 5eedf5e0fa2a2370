#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "colkern/graph.hpp"
#include "colkern/kernelizer.hpp"
#include "colkern/oracle.hpp"
#include "colkern/palette.hpp"

using namespace colkern;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// modulator {0,1,2}, vertex 3 adjacent to all of it, vertex 4 adjacent to
// {0,1}, and the outside edge 3-4
KernelInstance star_pair_instance() {
    Graph g(5);
    for (int z : {0, 1, 2}) g.add_edge(3, z);
    for (int z : {0, 1}) g.add_edge(4, z);
    g.add_edge(3, 4);
    return {g, {0, 1, 2}, 3};
}

ConstraintTag tag1(int v, std::vector<int> s) {
    return ConstraintTag{Type1Tag{v, std::move(s)}};
}

ConstraintTag tag2(int u1, int u2, std::vector<int> s1, std::vector<int> s2) {
    return ConstraintTag{Type2Tag{u1, u2, std::move(s1), std::move(s2)}};
}

}  // namespace

TEST_CASE("validate_instance accepts matchings plus a modulator") {
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_NOTHROW(validate_instance(path, {1}));

    Graph matching(4);
    matching.add_edge(0, 1);
    matching.add_edge(2, 3);
    CHECK_NOTHROW(validate_instance(matching, {}));

    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK_NOTHROW(validate_instance(p4, {1}));
    CHECK_THROWS_AS(validate_instance(p4, {0}), NotAModulatorError);

    try {
        validate_instance(complete(3), {});
        FAIL("expected NotAModulatorError");
    } catch (const NotAModulatorError& e) {
        CHECK(e.witness == 0);
    }

    CHECK_THROWS_AS(validate_instance(path, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_instance(path, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_instance(path, {3}), std::invalid_argument);
}

TEST_CASE("find_modulator prefers the exact minimum") {
    Graph matching(4);
    matching.add_edge(0, 1);
    matching.add_edge(2, 3);
    const ModulatorResult empty = find_modulator(matching);
    CHECK(empty.vertices.empty());
    CHECK(empty.optimal);

    const ModulatorResult tri = find_modulator(complete(3));
    CHECK(tri.vertices.size() == 1);
    CHECK(tri.optimal);

    const ModulatorResult k4 = find_modulator(complete(4));
    CHECK(k4.vertices.size() == 2);
    CHECK(k4.optimal);

    Graph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    const ModulatorResult cyc = find_modulator(c5);
    CHECK(cyc.vertices == std::vector<int>{0, 2});  // first size-2 subset that works
    CHECK(cyc.optimal);
}

TEST_CASE("find_modulator falls back to greedy under a budget") {
    CHECK_THROWS_AS(find_modulator(complete(6), 3, false), LimitExceededError);

    const ModulatorResult greedy = find_modulator(complete(6), 3, true);
    CHECK_FALSE(greedy.optimal);
    CHECK(greedy.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK_NOTHROW(validate_instance(complete(6), greedy.vertices));

    // a budget of zero with nothing to do still reports the optimum
    const ModulatorResult trivial = find_modulator(Graph(3), 0, true);
    CHECK(trivial.vertices.empty());
    CHECK(trivial.optimal);
}

TEST_CASE("constraint enumeration is complete and ordered") {
    const KernelInstance inst = star_pair_instance();
    const std::vector<ConstraintTag> tags = enumerate_constraints(inst);
    const std::vector<ConstraintTag> expected{
        tag1(3, {0, 1, 2}),
        tag2(3, 4, {0, 1}, {0, 1}),
        tag2(3, 4, {0, 2}, {0, 1}),
        tag2(3, 4, {1, 2}, {0, 1}),
        tag2(4, 3, {0, 1}, {0, 1}),
        tag2(4, 3, {0, 1}, {0, 2}),
        tag2(4, 3, {0, 1}, {1, 2}),
    };
    CHECK(tags == expected);
    CHECK(tags == enumerate_constraints(inst));  // deterministic

    // too few modulator neighbors: no constraints at all
    Graph sparse(3);
    sparse.add_edge(0, 1);
    sparse.add_edge(0, 2);
    CHECK(enumerate_constraints({sparse, {0}, 3}).empty());

    Graph bad = complete(3);
    CHECK_THROWS_AS(enumerate_constraints({bad, {}, 3}), NotAModulatorError);
}

TEST_CASE("kernelize keeps a graph already inside the modulator") {
    const Palette pal = construct_palette(3, PrimeField(3));
    const KernelResult kr = kernelize({complete(3), {0, 1, 2}, 3}, pal);
    CHECK(kr.reduced == complete(3));
    CHECK(kr.kept == std::vector<int>{0, 1, 2});
    CHECK(kr.modulator == std::vector<int>{0, 1, 2});
    CHECK(kr.stats.p1_total == 0);
    CHECK(kr.stats.p2_total == 0);
    CHECK(kr.stats.kernel_vertices == 3);
    CHECK(kr.stats.kernel_edges == 3);
    CHECK(kr.stats.kernel_bits == 12);  // 3 edges, 2 bits per endpoint

    const KernelResult none = kernelize({Graph(0), {}, 3}, pal);
    CHECK(none.reduced.vertex_count() == 0);
    CHECK(none.stats.kernel_bits == 0);
}

TEST_CASE("kernelize rejects bad parameters") {
    const Palette pal3 = construct_palette(3, PrimeField(3));
    const Palette pal4 = construct_palette(4, PrimeField(3));
    CHECK_THROWS_AS(kernelize({Graph(1), {}, 2}, pal3), std::invalid_argument);
    CHECK_THROWS_AS(kernelize({Graph(1), {}, 3}, pal4), std::invalid_argument);
}

TEST_CASE("kernelize preserves colorability both ways") {
    const Palette pal3 = construct_palette(3, PrimeField(3));
    const Palette pal4 = construct_palette(4, PrimeField(3));

    // K5 minus {0,1,2} is an edge; K5 needs 5 colors
    const KernelInstance hard{complete(5), {0, 1, 2}, 3};
    const KernelResult kr = kernelize(hard, pal3);
    CHECK_FALSE(is_q_colorable(hard.graph, 3).colorable());
    CHECK_FALSE(is_q_colorable(kr.reduced, 3).colorable());

    const KernelInstance hard4{complete(5), {0, 1, 2}, 4};
    const KernelResult kr4 = kernelize(hard4, pal4);
    CHECK(is_q_colorable(hard4.graph, 4).colorable() ==
          is_q_colorable(kr4.reduced, 4).colorable());

    const KernelInstance easy = star_pair_instance();
    const KernelResult ke = kernelize(easy, pal3);
    CHECK(is_q_colorable(easy.graph, 3).colorable());
    CHECK(is_q_colorable(ke.reduced, 3).colorable());
}

TEST_CASE("kernel structure maps back into the original graph") {
    const KernelInstance inst = star_pair_instance();
    const Palette pal = construct_palette(3, PrimeField(3));
    const KernelResult kr = kernelize(inst, pal);

    CHECK(std::is_sorted(kr.kept.begin(), kr.kept.end()));
    CHECK(kr.stats.p1_total == 1);
    CHECK(kr.stats.p2_total == 6);
    CHECK(kr.stats.p1_basis == 1);
    CHECK(kr.stats.p2_basis >= 1);
    CHECK(kr.stats.p2_basis <= 6);
    CHECK(kr.stats.kernel_vertices == kr.kept.size());
    CHECK(kr.stats.kernel_edges == kr.reduced.edge_count());

    // every kernel edge is an original edge under the id mapping
    for (const auto& [a, b] : kr.reduced.edges())
        CHECK(inst.graph.has_edge(kr.kept[a], kr.kept[b]));

    // the modulator survives with its induced subgraph intact
    REQUIRE(kr.modulator.size() == inst.modulator.size());
    for (std::size_t i = 0; i < kr.modulator.size(); ++i)
        CHECK(kr.kept[kr.modulator[i]] == inst.modulator[i]);
    for (std::size_t i = 0; i < kr.modulator.size(); ++i)
        for (std::size_t j = i + 1; j < kr.modulator.size(); ++j)
            CHECK(kr.reduced.has_edge(kr.modulator[i], kr.modulator[j]) ==
                  inst.graph.has_edge(inst.modulator[i], inst.modulator[j]));
}

TEST_CASE("extension conditions flag exactly the blocked colorings") {
    // modulator {0,1,2}, vertex 3 sees all of it
    Graph star(4);
    for (int z : {0, 1, 2}) star.add_edge(3, z);
    const KernelInstance inst{star, {0, 1, 2}, 3};

    const ExtensionReport bad = check_extension_conditions(inst, {{0, 0}, {1, 1}, {2, 2}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation == "vertex 3 sees 3 distinct colors on S={0,1,2}");

    CHECK(check_extension_conditions(inst, {{0, 0}, {1, 1}, {2, 0}}).ok);
}

TEST_CASE("edge condition compares neighborhood color sets") {
    // modulator {0,1,2,3} independent; outside edge 4-5 with split neighborhoods
    Graph g(6);
    g.add_edge(4, 0);
    g.add_edge(4, 1);
    g.add_edge(5, 2);
    g.add_edge(5, 3);
    g.add_edge(4, 5);
    const KernelInstance inst{g, {0, 1, 2, 3}, 3};

    const ExtensionReport bad =
        check_extension_conditions(inst, {{0, 0}, {1, 1}, {2, 0}, {3, 1}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation ==
          "edge (4,5) admits equally colored S1={0,1} and S2={2,3}");

    CHECK(check_extension_conditions(inst, {{0, 0}, {1, 1}, {2, 0}, {3, 0}}).ok);
}

TEST_CASE("coloring validation failures") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    const KernelInstance inst{g, {0, 1}, 3};

    CHECK_THROWS_AS(check_extension_conditions(inst, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(check_extension_conditions(inst, {{0, 0}, {1, 0}, {2, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_extension_conditions(inst, {{0, 0}, {1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(check_extension_conditions(inst, {{0, 0}, {1, 0}}), ImproperColoringError);
}

TEST_CASE("extend_coloring fills in the outside vertices") {
    // isolated outside vertex forced onto the one remaining color
    Graph star(4);
    for (int z : {0, 1, 2}) star.add_edge(3, z);
    const KernelInstance inst{star, {0, 1, 2}, 3};
    const auto ext = extend_coloring(inst, {{0, 0}, {1, 1}, {2, 0}});
    REQUIRE(ext.has_value());
    CHECK(*ext == std::vector<int>{0, 1, 0, 2});

    // matched pair picks the lexicographically first distinct free pair
    Graph pair(3);
    pair.add_edge(1, 0);
    pair.add_edge(2, 0);
    pair.add_edge(1, 2);
    const auto ext2 = extend_coloring({pair, {0}, 3}, {{0, 0}});
    REQUIRE(ext2.has_value());
    CHECK(*ext2 == std::vector<int>{0, 1, 2});

    // nothing outside: the input coloring comes straight back
    const auto ext3 = extend_coloring({complete(3), {0, 1, 2}, 3}, {{0, 0}, {1, 1}, {2, 2}});
    REQUIRE(ext3.has_value());
    CHECK(*ext3 == std::vector<int>{0, 1, 2});

    // blocked coloring: no extension
    CHECK_FALSE(extend_coloring(inst, {{0, 0}, {1, 1}, {2, 2}}).has_value());
    // improper modulator coloring: reported as unextendable, not thrown
    Graph edgy(3);
    edgy.add_edge(0, 1);
    CHECK_FALSE(extend_coloring({edgy, {0, 1}, 3}, {{0, 0}, {1, 0}}).has_value());
}

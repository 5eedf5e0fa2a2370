#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colkern/palette.hpp"

using namespace colkern;

namespace {

std::vector<std::uint32_t> column_values(const Palette& p, std::size_t i) {
    std::vector<std::uint32_t> out;
    for (const FieldElement& e : p.column(i)) out.push_back(e.value());
    return out;
}

Matrix from_columns(const PrimeField& f, const std::vector<std::vector<int>>& cols) {
    Matrix m(f, cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r) m.set(r, c, cols[c][r]);
    return m;
}

}  // namespace

TEST_CASE("alpha construction q=4 over GF(3) matches the upper triangular shape") {
    const PrimeField f(3);
    const Palette p = construct_palette(4, f, f.element(1));
    CHECK(column_values(p, 0) == std::vector<std::uint32_t>{1, 0, 0, 0});
    CHECK(column_values(p, 1) == std::vector<std::uint32_t>{1, 1, 0, 0});
    CHECK(column_values(p, 2) == std::vector<std::uint32_t>{1, 0, 1, 0});
    CHECK(column_values(p, 3) == std::vector<std::uint32_t>{1, 1, 1, 1});
    CHECK(verify_palette(p.columns()).pass());
}

TEST_CASE("alpha construction smallest cases") {
    const PrimeField f2(2);
    const Palette p2 = construct_palette(2, f2, f2.element(1));
    CHECK(column_values(p2, 0) == std::vector<std::uint32_t>{1, 0});
    CHECK(column_values(p2, 1) == std::vector<std::uint32_t>{1, 1});

    const PrimeField f3(3);
    const Palette p3 = construct_palette(3, f3, f3.element(2));
    CHECK(column_values(p3, 0) == std::vector<std::uint32_t>{1, 0, 0});
    CHECK(column_values(p3, 1) == std::vector<std::uint32_t>{1, 1, 0});
    CHECK(column_values(p3, 2) == std::vector<std::uint32_t>{1, 2, 1});
}

TEST_CASE("alpha restrictions") {
    const PrimeField f3(3);
    CHECK_THROWS_AS(construct_palette(4, f3, f3.element(0)), InvalidAlphaError);
    // 4-q = 1 for q=3
    CHECK_THROWS_AS(construct_palette(3, f3, f3.element(1)), InvalidAlphaError);
    CHECK_NOTHROW(construct_palette(3, f3, f3.element(2)));

    const PrimeField f2(2);
    CHECK_THROWS_AS(construct_palette(3, f2), NoValidAlphaError);
    CHECK_THROWS_AS(default_alpha(3, f2), NoValidAlphaError);
    CHECK_THROWS_AS(default_alpha(5, f2), NoValidAlphaError);
}

TEST_CASE("default alpha is the smallest allowed element") {
    const PrimeField f3(3);
    CHECK(default_alpha(4, f3).value() == 1);  // forbidden {0}
    CHECK(default_alpha(3, f3).value() == 2);  // forbidden {0, 1}
    CHECK(default_alpha(5, f3).value() == 1);  // forbidden {0, 2}
    const PrimeField f2(2);
    CHECK(default_alpha(2, f2).value() == 1);
    const PrimeField f5(5);
    CHECK(default_alpha(3, f5).value() == 2);  // forbidden {0, 1}
}

TEST_CASE("vandermonde construction") {
    const PrimeField f3(3);
    const Palette p = construct_vandermonde(3, f3);
    CHECK(column_values(p, 0) == std::vector<std::uint32_t>{1, 0, 0});
    CHECK(column_values(p, 1) == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(column_values(p, 2) == std::vector<std::uint32_t>{1, 2, 1});
    CHECK(verify_palette(p.columns()).pass());

    const PrimeField f2(2);
    CHECK_THROWS_AS(construct_vandermonde(3, f2), FieldTooSmallError);
    const Palette p2 = construct_vandermonde(2, f2);
    CHECK(column_values(p2, 0) == std::vector<std::uint32_t>{1, 0});
    CHECK(column_values(p2, 1) == std::vector<std::uint32_t>{1, 1});

    const std::vector<FieldElement> dup{f3.element(0), f3.element(1), f3.element(1)};
    CHECK_THROWS_AS(construct_vandermonde(3, f3, dup), DuplicateAlphaError);
}

TEST_CASE("verification reports carry witnesses") {
    const PrimeField f(3);
    // identity columns: second column starts with 0
    const Matrix m1 = from_columns(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const PaletteReport r1 = verify_palette(m1);
    CHECK_FALSE(r1.first_entries_ok);
    CHECK(r1.bad_column == 1);

    // independent columns whose first two truncations collide
    const Matrix m2 = from_columns(f, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
    const PaletteReport r2 = verify_palette(m2);
    CHECK(r2.first_entries_ok);
    CHECK(r2.independent_ok);
    CHECK_FALSE(r2.truncations_ok);
    REQUIRE(r2.bad_subset.has_value());
    CHECK(*r2.bad_subset == std::vector<std::size_t>{1, 2});

    // dependent columns
    const Matrix m3 = from_columns(f, {{1, 1, 0}, {1, 2, 0}, {1, 0, 0}});
    CHECK_FALSE(verify_palette(m3).independent_ok);

    const Matrix rect(f, 3, 4);
    CHECK_THROWS_AS(verify_palette(rect), DimensionMismatchError);
}

TEST_CASE("no 3-palette exists over GF(2), exhaustively") {
    const PrimeField f(2);
    // candidates with leading entry 1: (1,a,b)
    std::vector<std::vector<int>> candidates;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) candidates.push_back({1, a, b});
    int tried = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            for (std::size_t l = j + 1; l < candidates.size(); ++l) {
                const Matrix m =
                    from_columns(f, {candidates[i], candidates[j], candidates[l]});
                CHECK_FALSE(verify_palette(m).pass());
                ++tried;
            }
    CHECK(tried == 4);
}

TEST_CASE("existence boundary for q in [2,8], p in {2,3,5}") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const PrimeField f(p);
        for (std::uint32_t q = 2; q <= 8; ++q) {
            const bool expect = q % 2 == 0 || p >= 3;
            if (expect) {
                const Palette pal = construct_palette(q, f);
                CHECK(verify_palette(pal.columns()).pass());
            } else {
                CHECK_THROWS_AS(construct_palette(q, f), NoValidAlphaError);
            }
            if (p >= q) CHECK(verify_palette(construct_vandermonde(q, f).columns()).pass());
        }
    }
}

TEST_CASE("palette sums") {
    const PrimeField f3(3);
    const Palette p4 = construct_palette(4, f3, f3.element(1));
    std::vector<std::uint32_t> sum;
    for (const FieldElement& e : palette_sum(p4).c) sum.push_back(e.value());
    CHECK(sum == std::vector<std::uint32_t>{1, 2, 2, 1});

    const PrimeField f2(2);
    const Palette p2 = construct_palette(2, f2, f2.element(1));
    const PaletteSum s2 = palette_sum(p2);
    CHECK(s2.c[0].value() == 0);
    CHECK(s2.c[1].value() == 1);

    // leading entry of the sum is q mod p
    for (std::uint32_t q = 2; q <= 6; ++q) {
        const Palette pal = construct_palette(q, f3);
        CHECK(palette_sum(pal).c[0].value() == q % 3);
    }
}

TEST_CASE("palette constructor re-verifies") {
    const PrimeField f(3);
    const Matrix bad = from_columns(f, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
    CHECK_THROWS_AS(Palette(3, bad), std::logic_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "colkern/field.hpp"

using namespace colkern;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
// Exponential, so only used for dimensions <= 5.
FieldElement det_cofactor(const Matrix& m) {
    std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    const PrimeField& f = m.field();
    FieldElement acc = f.zero();
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(f, n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.set(r - 1, cc++, m.at(r, c));
            }
        }
        FieldElement term = m.at(0, j) * det_cofactor(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Matrix random_matrix(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m.set(r, c, static_cast<std::int64_t>(rng() % f.modulus()));
    return m;
}

Matrix alpha_palette_matrix(const PrimeField& f, std::size_t q, std::int64_t alpha) {
    Matrix m(f, q, q);
    for (std::size_t c = 0; c < q; ++c) m.set(0, c, 1);
    for (std::size_t c = 1; c + 1 < q; ++c) m.set(c, c, 1);
    m.set(1, q - 1, alpha);
    for (std::size_t r = 2; r < q; ++r) m.set(r, q - 1, 1);
    return m;
}

}  // namespace

TEST_CASE("prime field construction") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(2147483647));
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
}

TEST_CASE("inverse in GF(3)") {
    PrimeField f(3);
    CHECK(ff_inverse(f.element(2)) == f.element(2));
    CHECK(ff_inverse(f.element(1)) == f.element(1));
    CHECK_THROWS_AS(ff_inverse(f.element(0)), ZeroInverseError);
}

TEST_CASE("inverse is an involution on nonzero elements") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u}) {
        PrimeField f(p);
        for (std::uint32_t a = 1; a < p; ++a) {
            FieldElement x = f.element(a);
            CHECK(ff_inverse(ff_inverse(x)) == x);
            CHECK(x * ff_inverse(x) == f.one());
        }
    }
    PrimeField big(2147483647);
    for (std::int64_t a : {2ll, 12345ll, 2147483646ll}) {
        FieldElement x = big.element(a);
        CHECK(x * ff_inverse(x) == big.one());
        CHECK(ff_inverse(ff_inverse(x)) == x);
    }
}

TEST_CASE("mixing fields is rejected") {
    PrimeField f3(3), f5(5);
    CHECK_THROWS_AS(f3.element(1) + f5.element(1), FieldMismatchError);
    CHECK_THROWS_AS(f3.element(2) * f5.element(2), FieldMismatchError);
}

TEST_CASE("determinant basics") {
    PrimeField f(3);
    CHECK(mat_determinant(Matrix::identity(f, 4)) == f.one());

    Matrix eq(f, 3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        eq.set(r, 0, static_cast<std::int64_t>(r + 1));
        eq.set(r, 1, static_cast<std::int64_t>(r + 1));  // duplicate column
        eq.set(r, 2, static_cast<std::int64_t>(2 * r));
    }
    CHECK(mat_determinant(eq) == f.zero());

    // upper triangular with ones on the diagonal
    CHECK(mat_determinant(alpha_palette_matrix(f, 4, 1)) == f.one());

    Matrix rect(f, 2, 3);
    CHECK_THROWS_AS(mat_determinant(rect), NotSquareError);
}

TEST_CASE("determinant agrees with cofactor oracle and is multiplicative") {
    std::mt19937_64 rng(42);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                Matrix a = random_matrix(f, n, rng);
                Matrix b = random_matrix(f, n, rng);
                CHECK(mat_determinant(a) == det_cofactor(a));
                CHECK(mat_determinant(a * b) == mat_determinant(a) * mat_determinant(b));
            }
        }
    }
}

TEST_CASE("solve_unique reproduces the truncated palette system") {
    // q=4, alpha=1 over GF(3): D = (d_1 d_2 d_3), b = d_4, x = (2, 1, 1)
    PrimeField f(3);
    Matrix p = alpha_palette_matrix(f, 4, 1);
    Matrix d(f, 3, 3);
    std::vector<FieldElement> b;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) d.set(r, c, p.at(r, c));
        b.push_back(p.at(r, 3));
    }
    std::vector<FieldElement> x = solve_unique(d, b);
    REQUIRE(x.size() == 3);
    CHECK(x[0] == f.element(2));
    CHECK(x[1] == f.element(1));
    CHECK(x[2] == f.element(1));
}

TEST_CASE("solve_unique identity and singular cases") {
    PrimeField f(5);
    Matrix id = Matrix::identity(f, 3);
    std::vector<FieldElement> b = {f.element(4), f.element(0), f.element(2)};
    CHECK(solve_unique(id, b) == b);

    Matrix sing(f, 2, 2);
    sing.set(0, 0, 1);
    sing.set(0, 1, 2);
    sing.set(1, 0, 2);
    sing.set(1, 1, 4);
    CHECK_THROWS_AS(solve_unique(sing, {f.element(1), f.element(1)}), SingularError);
}

TEST_CASE("solve_unique round-trips random invertible systems") {
    std::mt19937_64 rng(7);
    PrimeField f(5);
    int done = 0;
    while (done < 30) {
        std::size_t n = 2 + rng() % 4;
        Matrix a = random_matrix(f, n, rng);
        if (mat_determinant(a).is_zero()) continue;
        std::vector<FieldElement> x;
        for (std::size_t i = 0; i < n; ++i) x.push_back(f.element(static_cast<std::int64_t>(rng() % 5)));
        CHECK(solve_unique(a, a * x) == x);
        ++done;
    }
}

TEST_CASE("row_reduce ranks") {
    PrimeField f(3);
    CHECK(row_reduce(alpha_palette_matrix(f, 4, 1)).rank == 4);
    CHECK(row_reduce(Matrix(f, 3, 4)).rank == 0);

    Matrix dup(f, 3, 3);
    for (std::size_t c = 0; c < 3; ++c) {
        dup.set(0, c, static_cast<std::int64_t>(c + 1));
        dup.set(1, c, static_cast<std::int64_t>(c + 1));  // duplicated row
        dup.set(2, c, static_cast<std::int64_t>(c * c));
    }
    CHECK(row_reduce(dup).rank < 3);
}

TEST_CASE("row_reduce rank is invariant under row permutation") {
    std::mt19937_64 rng(99);
    PrimeField f(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng() % 4;
        Matrix a = random_matrix(f, n, rng);
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
        Matrix shuffled(f, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) shuffled.set(r, c, a.at(perm[r], c));
        RowReduceResult ra = row_reduce(a);
        RowReduceResult rb = row_reduce(shuffled);
        CHECK(ra.rank == rb.rank);
        CHECK(ra.echelon == rb.echelon);  // RREF is canonical for the row space
    }
}

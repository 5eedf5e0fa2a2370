#ifndef COLKERN_POLYRING_HPP
#define COLKERN_POLYRING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "colkern/field.hpp"
#include "colkern/palette.hpp"

namespace colkern {

struct BlockCountMismatchError : std::invalid_argument {
    explicit BlockCountMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct UnboundVertexError : std::invalid_argument {
    explicit UnboundVertexError(int vertex)
        : std::invalid_argument("no color assigned to vertex " + std::to_string(vertex)) {}
};

/// Coordinate j (j >= 2) of the variable vector attached to a vertex.
/// Coordinate 1 never appears: it is the constant 1 after substitution.
struct VarId {
    std::int32_t vertex;
    std::int32_t coord;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Product of variables with positive exponents, kept sorted by VarId.
class Monomial {
public:
    using Factor = std::pair<VarId, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);

    static Monomial variable(VarId v) { return Monomial({{v, 1}}); }

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint32_t degree() const;
    bool is_constant() const { return factors_.empty(); }

    Monomial operator*(const Monomial& o) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic order: degree first, then the exponent vectors
/// compared with smaller VarId more significant.
int monomial_cmp(const Monomial& a, const Monomial& b);

inline bool operator<(const Monomial& a, const Monomial& b) { return monomial_cmp(a, b) < 0; }

/// Sparse multivariate polynomial over a prime field. Terms are kept in
/// ascending monomial order with nonzero coefficients; the leading term
/// is the last one.
class Poly {
public:
    using Term = std::pair<Monomial, std::uint32_t>;

    explicit Poly(const PrimeField& field) : field_(field) {}

    static Poly constant(const FieldElement& c);
    static Poly variable(const PrimeField& field, VarId v);

    const PrimeField& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.back().first.degree(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Monomial& leading_monomial() const;
    FieldElement leading_coeff() const;
    FieldElement coeff(const Monomial& m) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElement& s) const;

    void add_term(const Monomial& m, const FieldElement& c);

    std::string to_string() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void check_same(const Poly& o) const {
        if (field_ != o.field_) throw FieldMismatchError();
    }

    PrimeField field_;
    std::vector<Term> terms_;
};

/// p1 + s * p2
Poly poly_combine(const Poly& p1, const Poly& p2, const FieldElement& s);

/// A matrix column of the form  constant + sum of signed variable blocks,
/// e.g. c - x_1 - ... - x_{q-1} with c the palette sum.
struct AffineColumn {
    std::vector<FieldElement> constant;           // length q
    std::vector<std::pair<int, int>> blocks;      // (vertex, sign in {+1,-1})
};

/// A determinant column: either the variable block of a vertex or an
/// affine combination.
using ColumnSpec = std::variant<int, AffineColumn>;

/// Degree q-1 polynomial: the q x q determinant with 1 substituted for the
/// first-row variables. Vanishes on a C-colored matrix iff two columns agree.
Poly build_f(std::uint32_t q, const Palette& p, const std::vector<ColumnSpec>& blocks);

/// Degree q-2 polynomial: determinant of the first q-1 rows with the first
/// row substituted to 1. Vanishes iff two of the q-1 columns agree.
Poly build_g(std::uint32_t q, const Palette& p, const std::vector<int>& blocks);

/// Degree 2q-3 polynomial  h(x, y) = g(x) * f(y, c - sum x); vanishes iff
/// the x-columns repeat or the x and y column sets differ.
Poly build_h(std::uint32_t q, const Palette& p, const std::vector<int>& x_blocks,
             const std::vector<int>& y_blocks);

using ColorAssignment = std::map<int, std::vector<FieldElement>>;

/// Substitutes coordinate j of assignment(v) for each variable (v, j).
FieldElement poly_eval(const Poly& p, const ColorAssignment& assignment);

}  // namespace colkern

#endif

#ifndef COLKERN_FIELD_HPP
#define COLKERN_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace colkern {

struct FieldMismatchError : std::logic_error {
    FieldMismatchError() : std::logic_error("elements belong to different prime fields") {}
};

struct ZeroInverseError : std::domain_error {
    ZeroInverseError() : std::domain_error("zero has no multiplicative inverse") {}
};

struct NotSquareError : std::invalid_argument {
    NotSquareError() : std::invalid_argument("matrix is not square") {}
};

struct SingularError : std::domain_error {
    SingularError() : std::domain_error("matrix is singular") {}
};

class FieldElement;

/// The prime field GF(p). The modulus is checked for primality at
/// construction; all element values are canonical residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    /// Canonicalizes any signed value into the field.
    FieldElement element(std::int64_t v) const;
    FieldElement zero() const;
    FieldElement one() const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

/// A residue together with its modulus. Arithmetic between elements of
/// different fields throws FieldMismatchError.
class FieldElement {
public:
    FieldElement(std::uint32_t value, const PrimeField& field);

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    void check_same(const FieldElement& o) const {
        if (p_ != o.p_) throw FieldMismatchError();
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

FieldElement ff_inverse(const FieldElement& a);

/// Dense row-major matrix over a prime field.
class Matrix {
public:
    Matrix(const PrimeField& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const PrimeField& field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    FieldElement at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const FieldElement& v);
    void set(std::size_t r, std::size_t c, std::int64_t v);

    std::vector<FieldElement> column(std::size_t c) const;
    std::vector<FieldElement> row(std::size_t r) const;

    Matrix operator*(const Matrix& o) const;
    std::vector<FieldElement> operator*(const std::vector<FieldElement>& x) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string to_string() const;

private:
    std::size_t index(std::size_t r, std::size_t c) const { return r * cols_ + c; }

    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> entries_;
};

/// Determinant by Gaussian elimination; throws NotSquareError.
FieldElement mat_determinant(const Matrix& m);

/// Solves A*x = b for invertible A; throws SingularError otherwise.
std::vector<FieldElement> solve_unique(const Matrix& a, const std::vector<FieldElement>& b);

struct RowReduceResult {
    std::size_t rank;
    Matrix echelon;  // reduced row-echelon form
};

RowReduceResult row_reduce(const Matrix& m);

}  // namespace colkern

#endif

#include "colkern/field.hpp"

#include <sstream>

namespace colkern {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

FieldElement PrimeField::element(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElement(static_cast<std::uint32_t>(r), *this);
}

FieldElement PrimeField::zero() const { return FieldElement(0, *this); }

FieldElement PrimeField::one() const { return FieldElement(1 % p_, *this); }

FieldElement::FieldElement(std::uint32_t value, const PrimeField& field)
    : v_(value % field.modulus()), p_(field.modulus()) {}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
    if (s >= p_) s -= p_;
    return FieldElement(static_cast<std::uint32_t>(s), field());
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    std::uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return FieldElement(s, field());
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    std::uint64_t prod = static_cast<std::uint64_t>(v_) * o.v_;
    return FieldElement(static_cast<std::uint32_t>(prod % p_), field());
}

FieldElement FieldElement::operator-() const {
    return FieldElement(v_ == 0 ? 0 : p_ - v_, field());
}

FieldElement FieldElement::inverse() const {
    if (v_ == 0) throw ZeroInverseError();
    // extended Euclid on (v, p); p prime so gcd is 1
    std::int64_t r0 = v_, r1 = p_, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t quot = r0 / r1;
        std::int64_t r2 = r0 - quot * r1;
        std::int64_t s2 = s0 - quot * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return field().element(s0);
}

FieldElement ff_inverse(const FieldElement& a) { return a.inverse(); }

Matrix::Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
    return FieldElement(entries_[index(r, c)], field_);
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
    if (v.modulus() != field_.modulus()) throw FieldMismatchError();
    entries_[index(r, c)] = v.value();
}

void Matrix::set(std::size_t r, std::size_t c, std::int64_t v) {
    entries_[index(r, c)] = field_.element(v).value();
}

std::vector<FieldElement> Matrix::column(std::size_t c) const {
    std::vector<FieldElement> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

std::vector<FieldElement> Matrix::row(std::size_t r) const {
    std::vector<FieldElement> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatchError();
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < o.cols_; ++c) {
            FieldElement acc = field_.zero();
            for (std::size_t t = 0; t < cols_; ++t) acc += at(r, t) * o.at(t, c);
            out.set(r, c, acc);
        }
    return out;
}

std::vector<FieldElement> Matrix::operator*(const std::vector<FieldElement>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<FieldElement> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        FieldElement acc = field_.zero();
        for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * x[c];
        out.push_back(acc);
    }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << entries_[index(r, c)];
        }
        os << '\n';
    }
    return os.str();
}

FieldElement mat_determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw NotSquareError();
    const PrimeField& f = m.field();
    std::size_t n = m.rows();
    Matrix work = m;
    FieldElement det = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return f.zero();
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) {
                FieldElement tmp = work.at(col, c);
                work.set(col, c, work.at(pivot, c));
                work.set(pivot, c, tmp);
            }
            det = -det;
        }
        FieldElement pv = work.at(col, col);
        det *= pv;
        FieldElement inv = pv.inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            FieldElement factor = work.at(r, col) * inv;
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < n; ++c)
                work.set(r, c, work.at(r, c) - factor * work.at(col, c));
        }
    }
    return det;
}

RowReduceResult row_reduce(const Matrix& m) {
    Matrix work = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                FieldElement tmp = work.at(rank, c);
                work.set(rank, c, work.at(pivot, c));
                work.set(pivot, c, tmp);
            }
        FieldElement inv = work.at(rank, col).inverse();
        for (std::size_t c = 0; c < m.cols(); ++c)
            work.set(rank, c, work.at(rank, c) * inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            FieldElement factor = work.at(r, col);
            if (factor.is_zero()) continue;
            for (std::size_t c = 0; c < m.cols(); ++c)
                work.set(r, c, work.at(r, c) - factor * work.at(rank, c));
        }
        ++rank;
    }
    return RowReduceResult{rank, work};
}

std::vector<FieldElement> solve_unique(const Matrix& a, const std::vector<FieldElement>& b) {
    if (a.rows() != a.cols()) throw NotSquareError();
    std::size_t n = a.rows();
    if (b.size() != n) throw std::invalid_argument("right-hand side has wrong length");
    const PrimeField& f = a.field();
    Matrix aug(f, n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, n, b[r]);
    }
    RowReduceResult rr = row_reduce(aug);
    // rank([A|b]) exceeds rank(A) when the system is inconsistent, so the
    // singularity test must look at the coefficient block: A is invertible
    // iff its reduced block is the identity, i.e. the diagonal is all ones.
    for (std::size_t r = 0; r < n; ++r)
        if (rr.echelon.at(r, r) != f.one()) throw SingularError();
    std::vector<FieldElement> x;
    x.reserve(n);
    for (std::size_t r = 0; r < n; ++r) x.push_back(rr.echelon.at(r, n));
    return x;
}

}  // namespace colkern

#include "colkern/palette.hpp"

#include <set>

namespace colkern {

PaletteReport verify_palette(const Matrix& candidate) {
    if (candidate.rows() != candidate.cols() || candidate.rows() < 2)
        throw DimensionMismatchError();
    std::size_t q = candidate.rows();
    const PrimeField& f = candidate.field();

    PaletteReport report;
    for (std::size_t c = 0; c < q; ++c) {
        if (candidate.at(0, c) != f.one()) {
            report.first_entries_ok = false;
            report.bad_column = c;
            break;
        }
    }

    report.independent_ok = row_reduce(candidate).rank == q;

    // every q-1 columns, truncated to their first q-1 entries, stay independent
    for (std::size_t skip = 0; skip < q && report.truncations_ok; ++skip) {
        Matrix trunc(f, q - 1, q - 1);
        std::size_t cc = 0;
        std::vector<std::size_t> subset;
        for (std::size_t c = 0; c < q; ++c) {
            if (c == skip) continue;
            subset.push_back(c);
            for (std::size_t r = 0; r + 1 < q; ++r) trunc.set(r, cc, candidate.at(r, c));
            ++cc;
        }
        if (row_reduce(trunc).rank < q - 1) {
            report.truncations_ok = false;
            report.bad_subset = subset;
        }
    }
    return report;
}

Palette::Palette(std::uint32_t q, const Matrix& columns) : q_(q), columns_(columns) {
    if (columns.rows() != q || columns.cols() != q) throw DimensionMismatchError();
    if (!verify_palette(columns).pass())
        throw std::logic_error("palette constructor received columns that fail verification");
}

FieldElement default_alpha(std::uint32_t q, const PrimeField& f) {
    FieldElement forbidden = f.element(4 - static_cast<std::int64_t>(q));
    for (std::uint32_t v = 1; v < f.modulus(); ++v) {
        FieldElement cand = f.element(v);
        if (cand != forbidden) return cand;
    }
    throw NoValidAlphaError();
}

Palette construct_palette(std::uint32_t q, const PrimeField& f, const FieldElement& alpha) {
    if (q < 2) throw std::invalid_argument("palette needs q >= 2");
    if (alpha.modulus() != f.modulus()) throw FieldMismatchError();
    FieldElement forbidden = f.element(4 - static_cast<std::int64_t>(q));
    if (alpha.is_zero() || alpha == forbidden)
        throw InvalidAlphaError("alpha must avoid {0, 4-q}");

    // c_1 = e_1, c_i = e_1 + e_i for 2 <= i <= q-1, c_q = e_1 + alpha*e_2 + e_3 + ... + e_q
    Matrix cols(f, q, q);
    for (std::size_t c = 0; c < q; ++c) cols.set(0, c, 1);
    for (std::size_t c = 1; c + 1 < q; ++c) cols.set(c, c, 1);
    cols.set(1, q - 1, alpha);
    for (std::size_t r = 2; r < q; ++r) cols.set(r, q - 1, 1);
    return Palette(q, cols);
}

Palette construct_palette(std::uint32_t q, const PrimeField& f) {
    return construct_palette(q, f, default_alpha(q, f));
}

Palette construct_vandermonde(std::uint32_t q, const PrimeField& f,
                              const std::vector<FieldElement>& alphas) {
    if (q < 2) throw std::invalid_argument("palette needs q >= 2");
    if (f.modulus() < q) throw FieldTooSmallError();
    if (alphas.size() != q) throw std::invalid_argument("expected q evaluation points");
    std::set<std::uint32_t> seen;
    for (const FieldElement& a : alphas) {
        if (a.modulus() != f.modulus()) throw FieldMismatchError();
        if (!seen.insert(a.value()).second) throw DuplicateAlphaError();
    }
    Matrix cols(f, q, q);
    for (std::size_t c = 0; c < q; ++c) {
        FieldElement pw = f.one();
        for (std::size_t r = 0; r < q; ++r) {
            cols.set(r, c, pw);
            pw *= alphas[c];
        }
    }
    return Palette(q, cols);
}

Palette construct_vandermonde(std::uint32_t q, const PrimeField& f) {
    std::vector<FieldElement> alphas;
    for (std::uint32_t i = 0; i < q; ++i) alphas.push_back(f.element(i));
    return construct_vandermonde(q, f, alphas);
}

PaletteSum palette_sum(const Palette& p) {
    const PrimeField& f = p.field();
    std::vector<FieldElement> sum(p.q(), f.zero());
    for (std::size_t c = 0; c < p.q(); ++c)
        for (std::size_t r = 0; r < p.q(); ++r) sum[r] += p.columns().at(r, c);
    return PaletteSum{sum};
}

}  // namespace colkern

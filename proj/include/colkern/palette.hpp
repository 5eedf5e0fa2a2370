#ifndef COLKERN_PALETTE_HPP
#define COLKERN_PALETTE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colkern/field.hpp"

namespace colkern {

struct InvalidAlphaError : std::invalid_argument {
    explicit InvalidAlphaError(const std::string& what) : std::invalid_argument(what) {}
};

struct NoValidAlphaError : std::domain_error {
    NoValidAlphaError() : std::domain_error("no valid alpha exists (q odd over GF(2))") {}
};

struct FieldTooSmallError : std::invalid_argument {
    FieldTooSmallError() : std::invalid_argument("field has fewer than q elements") {}
};

struct DuplicateAlphaError : std::invalid_argument {
    DuplicateAlphaError() : std::invalid_argument("Vandermonde evaluation points must be distinct") {}
};

struct DimensionMismatchError : std::invalid_argument {
    DimensionMismatchError() : std::invalid_argument("palette candidate must consist of q vectors of length q") {}
};

/// Per-item verification report. A failing item carries a witness: the
/// offending column for the first-entry check, or the failing size-(q-1)
/// subset of column indices for the truncated-independence check.
struct PaletteReport {
    bool first_entries_ok = true;
    std::optional<std::size_t> bad_column;
    bool independent_ok = true;
    bool truncations_ok = true;
    std::optional<std::vector<std::size_t>> bad_subset;

    bool pass() const { return first_entries_ok && independent_ok && truncations_ok; }
};

PaletteReport verify_palette(const Matrix& candidate);

/// q column vectors in F^q: all first entries are one, the columns are
/// linearly independent, and every q-1 of them stay independent after the
/// last coordinate is dropped.
class Palette {
public:
    Palette(std::uint32_t q, const Matrix& columns);

    std::uint32_t q() const { return q_; }
    const PrimeField& field() const { return columns_.field(); }
    const Matrix& columns() const { return columns_; }
    std::vector<FieldElement> column(std::size_t i) const { return columns_.column(i); }

    std::string to_string() const { return columns_.to_string(); }

private:
    std::uint32_t q_;
    Matrix columns_;
};

struct PaletteSum {
    std::vector<FieldElement> c;
};

/// Smallest field element outside {0, 4-q}; throws NoValidAlphaError when
/// the forbidden set covers the field (q odd over GF(2)).
FieldElement default_alpha(std::uint32_t q, const PrimeField& f);

Palette construct_palette(std::uint32_t q, const PrimeField& f, const FieldElement& alpha);
Palette construct_palette(std::uint32_t q, const PrimeField& f);

Palette construct_vandermonde(std::uint32_t q, const PrimeField& f,
                              const std::vector<FieldElement>& alphas);
Palette construct_vandermonde(std::uint32_t q, const PrimeField& f);

PaletteSum palette_sum(const Palette& p);

}  // namespace colkern

#endif

#ifndef COLKERN_SPARSIFIER_HPP
#define COLKERN_SPARSIFIER_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "colkern/polyring.hpp"

namespace colkern {

/// Constraint for a vertex v outside the modulator with q modulator
/// neighbors S: "two vertices of S share a color".
struct Type1Tag {
    int v;
    std::vector<int> s;  // sorted, |s| = q

    friend auto operator<=>(const Type1Tag&, const Type1Tag&) = default;
};

/// Constraint for an oriented edge (u1, u2) outside the modulator with
/// (q-1)-subsets S1 of N(u1) and S2 of N(u2) inside it.
struct Type2Tag {
    int u1;
    int u2;
    std::vector<int> s1;  // sorted, |s1| = q-1
    std::vector<int> s2;  // sorted, |s2| = q-1

    friend auto operator<=>(const Type2Tag&, const Type2Tag&) = default;
};

struct ConstraintTag {
    std::variant<Type1Tag, Type2Tag> payload;

    bool is_type1() const { return payload.index() == 0; }
    const Type1Tag& type1() const { return std::get<Type1Tag>(payload); }
    const Type2Tag& type2() const { return std::get<Type2Tag>(payload); }

    std::string to_string() const;

    friend bool operator==(const ConstraintTag&, const ConstraintTag&) = default;
    friend bool operator<(const ConstraintTag& a, const ConstraintTag& b) {
        return a.payload < b.payload;
    }
};

/// Incrementally maintained reduced row-echelon store of constraint
/// polynomials. Each independent insertion keeps the tag of the ORIGINAL
/// polynomial, so the member tags form a spanning subset of everything
/// inserted.
class EchelonBasis {
public:
    explicit EchelonBasis(const PrimeField& field) : field_(field) {}

    /// Reduces p against the stored rows; appends the remainder (and the
    /// tag) when it is nonzero. Returns whether p was independent.
    bool insert(const Poly& p, const ConstraintTag& tag);

    std::size_t size() const { return rows_.size(); }

    /// Tags of the retained constraints, in insertion order.
    std::vector<ConstraintTag> members() const;

    const Poly& row_poly(std::size_t i) const { return rows_[i].reduced; }
    const ConstraintTag& row_tag(std::size_t i) const { return rows_[i].tag; }

    /// Remainder of p after pivot elimination against the current rows.
    Poly reduce(Poly p) const;

private:
    struct Row {
        Poly reduced;  // pivot coefficient normalized to 1
        Monomial pivot;
        ConstraintTag tag;
    };

    PrimeField field_;
    std::vector<Row> rows_;
    std::map<Monomial, std::size_t> pivot_index_;
};

}  // namespace colkern

#endif

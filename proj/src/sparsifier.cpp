#include "colkern/sparsifier.hpp"

#include <sstream>

namespace colkern {

namespace {

void join(std::ostringstream& os, const std::vector<int>& xs) {
    os << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    os << '}';
}

}  // namespace

std::string ConstraintTag::to_string() const {
    std::ostringstream os;
    if (is_type1()) {
        const Type1Tag& t = type1();
        os << "f[v=" << t.v << ",S=";
        join(os, t.s);
        os << ']';
    } else {
        const Type2Tag& t = type2();
        os << "h[u1=" << t.u1 << ",u2=" << t.u2 << ",S1=";
        join(os, t.s1);
        os << ",S2=";
        join(os, t.s2);
        os << ']';
    }
    return os.str();
}

Poly EchelonBasis::reduce(Poly p) const {
    if (p.field() != field_) throw FieldMismatchError();
    while (!p.is_zero()) {
        // largest monomial of p that is a pivot; row tails are pivot-free,
        // so each elimination only introduces non-pivot monomials
        const auto& terms = p.terms();
        std::size_t hit = terms.size();
        for (std::size_t i = terms.size(); i-- > 0;) {
            if (pivot_index_.count(terms[i].first)) {
                hit = i;
                break;
            }
        }
        if (hit == terms.size()) break;
        const Row& row = rows_[pivot_index_.at(terms[hit].first)];
        p = poly_combine(p, row.reduced, -FieldElement(terms[hit].second, field_));
    }
    return p;
}

bool EchelonBasis::insert(const Poly& p, const ConstraintTag& tag) {
    Poly remainder = reduce(p);
    if (remainder.is_zero()) return false;

    remainder = remainder.scaled(remainder.leading_coeff().inverse());
    Monomial pivot = remainder.leading_monomial();

    // keep existing rows free of the new pivot
    for (Row& row : rows_) {
        FieldElement c = row.reduced.coeff(pivot);
        if (!c.is_zero()) row.reduced = poly_combine(row.reduced, remainder, -c);
    }

    pivot_index_.emplace(pivot, rows_.size());
    rows_.push_back(Row{std::move(remainder), std::move(pivot), tag});
    return true;
}

std::vector<ConstraintTag> EchelonBasis::members() const {
    std::vector<ConstraintTag> out;
    out.reserve(rows_.size());
    for (const Row& row : rows_) out.push_back(row.tag);
    return out;
}

}  // namespace colkern

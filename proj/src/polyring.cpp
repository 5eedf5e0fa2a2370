#include "colkern/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace colkern {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second == 0) throw std::invalid_argument("zero exponent in monomial");
        if (i > 0 && !(factors_[i - 1].first < factors_[i].first))
            throw std::invalid_argument("monomial factors must be strictly sorted by variable");
    }
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const Factor& f : factors_) d += f.second;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<Factor> merged;
    merged.reserve(factors_.size() + o.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        if (factors_[i].first < o.factors_[j].first)
            merged.push_back(factors_[i++]);
        else if (o.factors_[j].first < factors_[i].first)
            merged.push_back(o.factors_[j++]);
        else {
            merged.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
            ++i;
            ++j;
        }
    }
    while (i < factors_.size()) merged.push_back(factors_[i++]);
    while (j < o.factors_.size()) merged.push_back(o.factors_[j++]);
    return Monomial(std::move(merged));
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Factor& f : factors_) {
        if (!first) os << '*';
        first = false;
        os << 'x' << f.first.vertex << '_' << f.first.coord;
        if (f.second > 1) os << '^' << f.second;
    }
    return os.str();
}

int monomial_cmp(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first < fb[j].first) return 1;   // a has the earlier variable
        if (fb[j].first < fa[i].first) return -1;
        if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    if (i < fa.size()) return -1;
    if (j < fb.size()) return 1;
    return 0;
}

Poly Poly::constant(const FieldElement& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(), c.value());
    return p;
}

Poly Poly::variable(const PrimeField& field, VarId v) {
    if (v.coord < 2) throw std::invalid_argument("variable coordinates start at 2");
    Poly p(field);
    p.terms_.emplace_back(Monomial::variable(v), 1 % field.modulus());
    return p;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    return terms_.back().first;
}

FieldElement Poly::leading_coeff() const {
    if (terms_.empty()) return field_.zero();
    return FieldElement(terms_.back().second, field_);
}

FieldElement Poly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return FieldElement(it->second, field_);
    return field_.zero();
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    Poly out(field_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    const std::uint64_t p = field_.modulus();
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = monomial_cmp(terms_[i].first, o.terms_[j].first);
        if (c < 0)
            out.terms_.push_back(terms_[i++]);
        else if (c > 0)
            out.terms_.push_back(o.terms_[j++]);
        else {
            std::uint32_t sum = static_cast<std::uint32_t>((terms_[i].second + static_cast<std::uint64_t>(o.terms_[j].second)) % p);
            if (sum != 0) out.terms_.emplace_back(terms_[i].first, sum);
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    return *this + o.scaled(-o.field_.one());
}

Poly Poly::scaled(const FieldElement& s) const {
    if (s.modulus() != field_.modulus()) throw FieldMismatchError();
    Poly out(field_);
    if (s.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    const std::uint64_t p = field_.modulus();
    for (const Term& t : terms_) {
        std::uint32_t c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.second) * s.value() % p);
        if (c != 0) out.terms_.emplace_back(t.first, c);
    }
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    const std::uint64_t p = field_.modulus();
    std::map<Monomial, std::uint32_t> acc;
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Monomial m = a.first * b.first;
            std::uint64_t c = static_cast<std::uint64_t>(a.second) * b.second % p;
            auto [it, inserted] = acc.emplace(std::move(m), static_cast<std::uint32_t>(c));
            if (!inserted) {
                it->second = static_cast<std::uint32_t>((it->second + c) % p);
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    Poly out(field_);
    out.terms_.assign(acc.begin(), acc.end());
    return out;
}

void Poly::add_term(const Monomial& m, const FieldElement& c) {
    if (c.modulus() != field_.modulus()) throw FieldMismatchError();
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) {
        std::uint32_t sum = static_cast<std::uint32_t>((static_cast<std::uint64_t>(it->second) + c.value()) % field_.modulus());
        if (sum == 0)
            terms_.erase(it);
        else
            it->second = sum;
    } else {
        terms_.insert(it, {m, c.value()});
    }
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (it != terms_.rbegin()) os << " + ";
        if (it->second != 1 || it->first.is_constant()) os << it->second;
        if (it->second != 1 && !it->first.is_constant()) os << '*';
        if (!it->first.is_constant()) os << it->first.to_string();
    }
    return os.str();
}

Poly poly_combine(const Poly& p1, const Poly& p2, const FieldElement& s) {
    if (p1.field() != p2.field() || s.modulus() != p1.field().modulus())
        throw FieldMismatchError();
    return p1 + p2.scaled(s);
}

namespace {

int permutation_parity(const std::vector<std::size_t>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Permutation-sum expansion of det(entries); entries are polynomials, so
// symbolic elimination (which would divide by entries) is not an option.
Poly det_expand(const PrimeField& f, const std::vector<std::vector<Poly>>& entries) {
    std::size_t n = entries.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly det(f);
    do {
        Poly prod = Poly::constant(f.one());
        for (std::size_t r = 0; r < n && !prod.is_zero(); ++r) prod = prod * entries[r][perm[r]];
        if (permutation_parity(perm) < 0) prod = prod.scaled(-f.one());
        det = det + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Entry of the substituted determinant matrix at 1-based coordinate
// `coord`; coordinate 1 is the constant row.
Poly column_entry(const PrimeField& f, const ColumnSpec& spec, std::int32_t coord) {
    if (const int* vertex = std::get_if<int>(&spec)) {
        if (coord == 1) return Poly::constant(f.one());
        return Poly::variable(f, VarId{*vertex, coord});
    }
    const AffineColumn& aff = std::get<AffineColumn>(spec);
    Poly e = Poly::constant(aff.constant[coord - 1]);
    for (const auto& [vertex, sign] : aff.blocks) {
        FieldElement s = sign >= 0 ? f.one() : -f.one();
        if (coord == 1)
            e = e + Poly::constant(s);
        else
            e = e + Poly::variable(f, VarId{vertex, coord}).scaled(s);
    }
    return e;
}

void check_affine(const PrimeField& f, const std::vector<ColumnSpec>& blocks, std::uint32_t q) {
    for (const ColumnSpec& spec : blocks) {
        if (const AffineColumn* aff = std::get_if<AffineColumn>(&spec)) {
            if (aff->constant.size() != q)
                throw std::invalid_argument("affine column constant must have q entries");
            for (const FieldElement& c : aff->constant)
                if (c.modulus() != f.modulus()) throw FieldMismatchError();
        }
    }
}

}  // namespace

Poly build_f(std::uint32_t q, const Palette& p, const std::vector<ColumnSpec>& blocks) {
    if (q < 2) throw std::invalid_argument("f needs q >= 2");
    if (blocks.size() != q)
        throw BlockCountMismatchError("f expects exactly q columns, got " + std::to_string(blocks.size()));
    const PrimeField& f = p.field();
    check_affine(f, blocks, q);
    std::vector<std::vector<Poly>> entries;
    entries.reserve(q);
    for (std::uint32_t r = 0; r < q; ++r) {
        std::vector<Poly> row;
        row.reserve(q);
        for (std::uint32_t c = 0; c < q; ++c)
            row.push_back(column_entry(f, blocks[c], static_cast<std::int32_t>(r + 1)));
        entries.push_back(std::move(row));
    }
    return det_expand(f, entries);
}

Poly build_g(std::uint32_t q, const Palette& p, const std::vector<int>& blocks) {
    if (q < 2) throw std::invalid_argument("g needs q >= 2");
    if (blocks.size() != q - 1)
        throw BlockCountMismatchError("g expects exactly q-1 columns, got " + std::to_string(blocks.size()));
    const PrimeField& f = p.field();
    // determinant of the first q-1 rows only
    std::vector<std::vector<Poly>> entries;
    entries.reserve(q - 1);
    for (std::uint32_t r = 0; r + 1 < q; ++r) {
        std::vector<Poly> row;
        row.reserve(q - 1);
        for (int vertex : blocks) {
            if (r == 0)
                row.push_back(Poly::constant(f.one()));
            else
                row.push_back(Poly::variable(f, VarId{vertex, static_cast<std::int32_t>(r + 1)}));
        }
        entries.push_back(std::move(row));
    }
    return det_expand(f, entries);
}

Poly build_h(std::uint32_t q, const Palette& p, const std::vector<int>& x_blocks,
             const std::vector<int>& y_blocks) {
    if (q < 2) throw std::invalid_argument("h needs q >= 2");
    if (x_blocks.size() != q - 1 || y_blocks.size() != q - 1)
        throw BlockCountMismatchError("h expects two lists of exactly q-1 vertices");
    if (std::set<int>(x_blocks.begin(), x_blocks.end()).size() != x_blocks.size() ||
        std::set<int>(y_blocks.begin(), y_blocks.end()).size() != y_blocks.size())
        throw std::invalid_argument("h block lists must not repeat a vertex within a list");

    Poly g = build_g(q, p, x_blocks);

    AffineColumn last;
    last.constant = palette_sum(p).c;
    for (int vertex : x_blocks) last.blocks.emplace_back(vertex, -1);
    std::vector<ColumnSpec> f_blocks;
    f_blocks.reserve(q);
    for (int vertex : y_blocks) f_blocks.emplace_back(vertex);
    f_blocks.emplace_back(std::move(last));
    Poly f = build_f(q, p, f_blocks);

    return g * f;
}

FieldElement poly_eval(const Poly& p, const ColorAssignment& assignment) {
    const PrimeField& f = p.field();
    FieldElement acc = f.zero();
    for (const Poly::Term& t : p.terms()) {
        FieldElement term(t.second, f);
        for (const Monomial::Factor& factor : t.first.factors()) {
            auto it = assignment.find(factor.first.vertex);
            if (it == assignment.end()) throw UnboundVertexError(factor.first.vertex);
            const std::vector<FieldElement>& color = it->second;
            std::size_t idx = static_cast<std::size_t>(factor.first.coord - 1);
            if (idx >= color.size()) throw std::invalid_argument("color vector too short for coordinate");
            FieldElement base = color[idx];
            if (base.modulus() != f.modulus()) throw FieldMismatchError();
            for (std::uint32_t e = 0; e < factor.second; ++e) term *= base;
        }
        acc += term;
    }
    return acc;
}

}  // namespace colkern

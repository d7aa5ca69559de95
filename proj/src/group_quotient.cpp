#include "nilcomm/group_quotient.hpp"

#include <algorithm>
#include <sstream>

namespace nilcomm {

std::vector<std::uint32_t> dmonomial_index_multiset(const DMonomial& m) {
    std::vector<std::uint32_t> out;
    out.reserve(2 * m.size());
    for (const auto& [i, j] : m) {
        out.push_back(i);
        out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DPoly DPoly::of(DMonomial m) {
    DPoly p;
    p.terms_.insert(std::move(m));
    return p;
}

void DPoly::toggle(DMonomial m) {
    auto it = terms_.find(m);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(std::move(m));
}

DPoly DPoly::operator+(const DPoly& o) const {
    DPoly r = *this;
    for (const auto& m : o.terms_) r.toggle(m);
    return r;
}

namespace {

// Union of two sorted distinct pair sets; nullopt when a pair repeats.
std::optional<DMonomial> merge_squarefree(const DMonomial& a, const DMonomial& b) {
    DMonomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            out.push_back(a[i++]);
        else if (b[j] < a[i])
            out.push_back(b[j++]);
        else
            return std::nullopt;  // d_{ij}^2 = 0
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

}  // namespace

DPoly DPoly::operator*(const DPoly& o) const {
    DPoly r;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            auto m = merge_squarefree(a, b);
            if (m) r.toggle(std::move(*m));
        }
    return r;
}

std::string DPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.empty()) {
            os << "1";
            continue;
        }
        bool f2 = true;
        for (const auto& [i, j] : m) {
            if (!f2) os << "*";
            f2 = false;
            os << "d(" << i << "," << j << ")";
        }
    }
    return os.str();
}

void TPoly::toggle(std::vector<std::uint32_t> m) {
    auto it = terms_.find(m);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(std::move(m));
}

std::string TPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.empty()) {
            os << "1";
            continue;
        }
        bool f2 = true;
        for (std::uint32_t i : m) {
            if (!f2) os << "*";
            f2 = false;
            os << "t" << i;
        }
    }
    return os.str();
}

TPoly psi(const DPoly& x) {
    TPoly out;
    for (const DMonomial& m : x.terms()) {
        std::vector<std::uint32_t> idx = dmonomial_index_multiset(m);
        bool dead = false;
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (idx[i] == idx[i - 1]) {
                dead = true;  // t_i^2 = 0
                break;
            }
        if (!dead) out.toggle(std::move(idx));
    }
    return out;
}

namespace {

// Subset-sum transform over GF(2) on sets of pair-sets. Expanding either
// prod (d_{ij} + 1) or prod (c_{ij} + 1) is this same map, and mod 2 it is an
// involution, so to_dbasis and from_dbasis share it.
std::set<DMonomial> subset_transform(const std::set<DMonomial>& terms) {
    std::set<DMonomial> out;
    for (const DMonomial& q : terms) {
        const std::size_t n = q.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            DMonomial sub;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::uint64_t{1} << k)) sub.push_back(q[k]);
            auto it = out.find(sub);
            if (it != out.end())
                out.erase(it);
            else
                out.insert(std::move(sub));
        }
    }
    return out;
}

}  // namespace

DPoly to_dbasis(const GroupAlgebraElement& x) {
    std::set<DMonomial> cmonos;
    for (const GroupNF& t : x.terms()) {
        if (!t.gens.empty()) throw NotInDerivedSubalgebraError();
        cmonos.insert(t.comms);
    }
    DPoly out;
    for (DMonomial m : subset_transform(cmonos)) out.toggle(std::move(m));
    return out;
}

GroupAlgebraElement from_dbasis(const DPoly& x) {
    GroupAlgebraElement out;
    for (const DMonomial& m : subset_transform(x.terms()))
        out.toggle(GroupNF{{}, m});
    return out;
}

DPoly s_generator(std::uint32_t i1, std::uint32_t i2, std::uint32_t i3, std::uint32_t i4) {
    auto two_pair = [](std::uint32_t a, std::uint32_t b, std::uint32_t c,
                       std::uint32_t d) -> std::optional<DMonomial> {
        if (a == b || c == d) return std::nullopt;  // d_{ii} = 0
        IndexPair p = make_pair_sorted(a, b);
        IndexPair q = make_pair_sorted(c, d);
        if (p == q) return std::nullopt;  // d^2 = 0
        if (q < p) std::swap(p, q);
        return DMonomial{p, q};
    };
    DPoly s;
    if (auto m = two_pair(i1, i2, i3, i4)) s.toggle(std::move(*m));
    if (auto m = two_pair(i1, i3, i2, i4)) s.toggle(std::move(*m));
    return s;
}

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::InIdeal: return "InIdeal";
        case Membership::NotInIdeal: return "NotInIdeal";
        case Membership::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

bool multiset_contains(const std::vector<std::uint32_t>& big,
                       const std::vector<std::uint32_t>& small) {
    std::size_t i = 0;
    for (std::uint32_t v : small) {
        while (i < big.size() && big[i] < v) ++i;
        if (i >= big.size() || big[i] != v) return false;
        ++i;
    }
    return true;
}

std::vector<std::uint32_t> multiset_minus(const std::vector<std::uint32_t>& big,
                                          const std::vector<std::uint32_t>& small) {
    std::vector<std::uint32_t> out;
    std::size_t j = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (j < small.size() && big[i] == small[j])
            ++j;
        else
            out.push_back(big[i]);
    }
    return out;
}

void enumerate_matchings(std::vector<std::uint32_t> remaining, DMonomial& current,
                         std::vector<DMonomial>& out) {
    if (remaining.empty()) {
        DMonomial m = current;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
        return;
    }
    if (remaining.size() % 2 != 0) return;
    const std::uint32_t a = remaining.front();
    for (std::size_t k = 1; k < remaining.size(); ++k) {
        const std::uint32_t b = remaining[k];
        if (b == a) continue;  // no diagonal pairs
        if (k >= 2 && remaining[k] == remaining[k - 1])
            continue;  // one occurrence per partner value
        IndexPair p{a, b};
        if (std::find(current.begin(), current.end(), p) != current.end())
            continue;  // squarefree
        std::vector<std::uint32_t> rest;
        rest.reserve(remaining.size() - 2);
        for (std::size_t t = 1; t < remaining.size(); ++t)
            if (t != k) rest.push_back(remaining[t]);
        current.push_back(p);
        enumerate_matchings(std::move(rest), current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<DMonomial> dmonomials_of_multiset(const std::vector<std::uint32_t>& multiset) {
    std::vector<DMonomial> out;
    if (multiset.size() % 2 != 0) return out;
    DMonomial current;
    enumerate_matchings(multiset, current, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IdealContext::IdealContext(std::uint32_t exact_limit) : exact_limit_(exact_limit) {}

const IdealContext::Component& IdealContext::component(
    const std::vector<std::uint32_t>& multiset) const {
    std::scoped_lock lock(mutex_);
    auto it = cache_.find(multiset);
    if (it != cache_.end()) return *it->second;

    auto comp = std::make_unique<Component>();
    comp->columns = dmonomials_of_multiset(multiset);
    for (std::size_t k = 0; k < comp->columns.size(); ++k)
        comp->column_index.emplace(comp->columns[k], k);

    std::vector<std::uint32_t> values = multiset;
    values.erase(std::unique(values.begin(), values.end()), values.end());

    // Rows: every product (squarefree monomial) * (S generator) whose index
    // multiset matches this component. Homogeneity of S makes this complete.
    std::set<DPoly> seen;
    std::size_t tag = 0;
    const std::size_t nv = values.size();
    for (std::size_t a = 0; a < nv; ++a)
        for (std::size_t b = 0; b < nv; ++b)
            for (std::size_t c = 0; c < nv; ++c)
                for (std::size_t d = 0; d < nv; ++d) {
                    DPoly s = s_generator(values[a], values[b], values[c], values[d]);
                    if (s.is_zero()) continue;
                    std::vector<std::uint32_t> ms{values[a], values[b], values[c],
                                                  values[d]};
                    std::sort(ms.begin(), ms.end());
                    if (!multiset_contains(multiset, ms)) continue;
                    if (!seen.insert(s).second) continue;
                    for (const DMonomial& mu :
                         dmonomials_of_multiset(multiset_minus(multiset, ms))) {
                        DPoly row = DPoly::of(mu) * s;
                        if (row.is_zero()) continue;
                        std::vector<DMonomial> monos(row.terms().begin(),
                                                     row.terms().end());
                        comp->span.insert(to_vector(*comp, monos), tag++);
                    }
                }

    const Component& ref = *comp;
    cache_.emplace(multiset, std::move(comp));
    return ref;
}

SparseVector IdealContext::to_vector(const Component& c,
                                     const std::vector<DMonomial>& monos) const {
    std::vector<SparseVector::Entry> entries;
    entries.reserve(monos.size());
    for (const DMonomial& m : monos) {
        auto it = c.column_index.find(m);
        if (it == c.column_index.end()) throw Error("monomial outside its component");
        entries.emplace_back(it->second, Scalar::one(FieldTag::Gf2));
    }
    return SparseVector::from_entries(FieldTag::Gf2, std::move(entries));
}

namespace {

// Split into (generator part, FG' part in the d-basis) components.
std::map<std::vector<std::uint32_t>, DPoly> split_by_gens(const GroupAlgebraElement& x) {
    std::map<std::vector<std::uint32_t>, GroupAlgebraElement> groups;
    for (const GroupNF& t : x.terms())
        groups[t.gens].toggle(GroupNF{{}, t.comms});
    std::map<std::vector<std::uint32_t>, DPoly> out;
    for (auto& [gens, elem] : groups) out.emplace(gens, to_dbasis(elem));
    return out;
}

std::map<std::vector<std::uint32_t>, DPoly> split_by_multiset(const DPoly& x) {
    std::map<std::vector<std::uint32_t>, DPoly> out;
    for (const DMonomial& m : x.terms()) out[dmonomial_index_multiset(m)].toggle(m);
    return out;
}

std::size_t distinct_count(const std::vector<std::uint32_t>& multiset) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < multiset.size(); ++i)
        if (i == 0 || multiset[i] != multiset[i - 1]) ++n;
    return n;
}

}  // namespace

Membership IdealContext::member_dpoly(const DPoly& x) const {
    bool unknown = false;
    for (const auto& [multiset, part] : split_by_multiset(x)) {
        if (distinct_count(multiset) <= exact_limit_) {
            const Component& comp = component(multiset);
            std::vector<DMonomial> monos(part.terms().begin(), part.terms().end());
            if (!comp.span.contains(to_vector(comp, monos)))
                return Membership::NotInIdeal;
        } else if (!psi(part).is_zero()) {
            return Membership::NotInIdeal;
        } else {
            unknown = true;
        }
    }
    return unknown ? Membership::Unknown : Membership::InIdeal;
}

Membership IdealContext::member(const GroupAlgebraElement& x,
                                std::uint32_t support_bound) const {
    if (x.max_index() > support_bound)
        throw SupportExceededError("element uses generator indices above the support bound");
    bool unknown = false;
    for (const auto& [gens, part] : split_by_gens(x)) {
        Membership m = member_dpoly(part);
        if (m == Membership::NotInIdeal) return Membership::NotInIdeal;
        if (m == Membership::Unknown) unknown = true;
    }
    return unknown ? Membership::Unknown : Membership::InIdeal;
}

GroupAlgebraElement IdealContext::reduce(const GroupAlgebraElement& x) const {
    GroupAlgebraElement out;
    for (const auto& [gens, part] : split_by_gens(x)) {
        DPoly reduced;
        for (const auto& [multiset, comp_part] : split_by_multiset(part)) {
            if (distinct_count(multiset) > exact_limit_)
                throw SupportExceededError(
                    "component support exceeds the exact reduction limit");
            const Component& comp = component(multiset);
            std::vector<DMonomial> monos(comp_part.terms().begin(),
                                         comp_part.terms().end());
            SparseVector residual = comp.span.reduce(to_vector(comp, monos)).residual;
            for (const auto& [col, coeff] : residual.entries())
                reduced.toggle(comp.columns[col]);
        }
        for (const GroupNF& t : from_dbasis(reduced).terms())
            out.toggle(GroupNF{gens, t.comms});
    }
    return out;
}

bool IdealContext::psi_nonzero(const GroupAlgebraElement& x) const {
    for (const auto& [gens, part] : split_by_gens(x))
        if (!psi(part).is_zero()) return true;
    return false;
}

GroupQuotientAlgebra::GroupQuotientAlgebra(std::uint32_t support_bound,
                                           std::shared_ptr<IdealContext> ideal)
    : support_bound_(support_bound),
      ideal_(ideal ? std::move(ideal) : std::make_shared<IdealContext>()),
      exact_(support_bound_ <= ideal_->exact_limit()) {}

GroupAlgebraElement GroupQuotientAlgebra::generator(std::uint32_t i) const {
    if (i == 0 || i > support_bound_)
        throw SupportExceededError("generator y" + std::to_string(i) +
                                   " outside support bound " +
                                   std::to_string(support_bound_));
    return coset(group_generator(i));
}

GroupAlgebraElement GroupQuotientAlgebra::coset(const GroupNF& nf) const {
    Element e = GroupAlgebraElement::of(nf);
    check_support(e);
    return reduce(e);
}

GroupAlgebraElement GroupQuotientAlgebra::scale(const Scalar& s, const Element& x) const {
    if (s.tag() != FieldTag::Gf2) throw MixedFieldsError();
    return s.is_zero() ? zero() : x;
}

Ternary GroupQuotientAlgebra::is_zero(const Element& x) const {
    if (x.is_zero()) return Ternary::True;
    switch (ideal_->member(x, std::max(support_bound_, x.max_index()))) {
        case Membership::InIdeal: return Ternary::True;
        case Membership::NotInIdeal: return Ternary::False;
        case Membership::Unknown: return Ternary::Unknown;
    }
    return Ternary::Unknown;
}

std::vector<std::pair<GroupNF, Scalar>> GroupQuotientAlgebra::terms(
    const Element& x) const {
    std::vector<std::pair<GroupNF, Scalar>> out;
    out.reserve(x.terms().size());
    for (const GroupNF& t : x.terms()) out.emplace_back(t, Scalar::one(FieldTag::Gf2));
    return out;
}

GroupAlgebraElement GroupQuotientAlgebra::mul_basis(const Basis& a, const Basis& b) const {
    return reduce(GroupAlgebraElement::of(group_mul(a, b)));
}

GroupAlgebraElement GroupQuotientAlgebra::from_term(const Basis& nf, const Scalar& c) const {
    if (c.tag() != FieldTag::Gf2) throw MixedFieldsError();
    if (c.is_zero()) return zero();
    return GroupAlgebraElement::of(nf);
}

std::vector<GroupAlgebraElement> GroupQuotientAlgebra::spanning_cosets() const {
    if (support_bound_ > 4)
        throw UnsupportedParametersError(
            "coset enumeration is limited to support bound 4");
    std::vector<IndexPair> pairs;
    for (std::uint32_t i = 1; i <= support_bound_; ++i)
        for (std::uint32_t j = i + 1; j <= support_bound_; ++j) pairs.push_back({i, j});
    std::vector<Element> out;
    std::set<Element> seen;  // dedup cosets that reduce to the same form
    for (std::uint64_t gmask = 0; gmask < (std::uint64_t{1} << support_bound_); ++gmask) {
        GroupNF base;
        for (std::uint32_t i = 0; i < support_bound_; ++i)
            if (gmask & (std::uint64_t{1} << i)) base.gens.push_back(i + 1);
        for (std::uint64_t cmask = 0; cmask < (std::uint64_t{1} << pairs.size()); ++cmask) {
            GroupNF nf = base;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (cmask & (std::uint64_t{1} << k)) nf.comms.push_back(pairs[k]);
            Element red = reduce(GroupAlgebraElement::of(nf));
            if (red.is_zero()) continue;
            if (seen.insert(red).second) out.push_back(std::move(red));
        }
    }
    return out;
}

GroupAlgebraElement GroupQuotientAlgebra::reduce(const Element& x) const {
    check_support(x);
    if (!exact_) return x;
    return ideal_->reduce(x);
}

void GroupQuotientAlgebra::check_support(const Element& x) const {
    if (x.max_index() > support_bound_)
        throw SupportExceededError("element uses generator y" +
                                   std::to_string(x.max_index()) +
                                   " above support bound " +
                                   std::to_string(support_bound_));
}

}  // namespace nilcomm

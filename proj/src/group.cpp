#include "nilcomm/group.hpp"

#include <algorithm>
#include <sstream>

namespace nilcomm {

namespace {

std::vector<std::uint32_t> symmetric_difference(const std::vector<std::uint32_t>& a,
                                                const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

void toggle_pair(std::vector<IndexPair>& comms, IndexPair p) {
    auto it = std::lower_bound(comms.begin(), comms.end(), p);
    if (it != comms.end() && *it == p)
        comms.erase(it);
    else
        comms.insert(it, p);
}

}  // namespace

std::uint32_t GroupNF::max_index() const {
    std::uint32_t mx = gens.empty() ? 0 : gens.back();
    for (const auto& [i, j] : comms) mx = std::max(mx, j);
    return mx;
}

std::string GroupNF::str() const {
    if (is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i : gens) {
        if (!first) os << "*";
        first = false;
        os << "y" << i;
    }
    for (const auto& [i, j] : comms) {
        if (!first) os << "*";
        first = false;
        os << "c(" << i << "," << j << ")";
    }
    return os.str();
}

GroupNF group_identity() { return {}; }

GroupNF group_generator(std::uint32_t i) {
    if (i == 0) throw Error("group generator indices are 1-based");
    return GroupNF{{i}, {}};
}

GroupNF group_mul(const GroupNF& a, const GroupNF& b) {
    GroupNF r;
    r.gens = symmetric_difference(a.gens, b.gens);
    r.comms = a.comms;
    for (IndexPair p : b.comms) toggle_pair(r.comms, p);
    // Collect y_v (v from b) past every larger y_u (u from a): each strict
    // crossing u > v contributes c_{vu}; u = v collapses by y^2 = 1 with no
    // commutator since (y,y) = 1.
    for (std::uint32_t u : a.gens)
        for (std::uint32_t v : b.gens)
            if (u > v) toggle_pair(r.comms, {v, u});
    return r;
}

GroupNF group_inv(const GroupNF& a) {
    // In class 2 with all squares central: (y_A c)^(-1) = y_A c' where c'
    // differs from c by the commutators of all pairs inside A.
    GroupNF r = a;
    for (std::size_t i = 0; i < a.gens.size(); ++i)
        for (std::size_t j = i + 1; j < a.gens.size(); ++j)
            toggle_pair(r.comms, {a.gens[i], a.gens[j]});
    return r;
}

GroupNF group_comm(const GroupNF& a, const GroupNF& b) {
    // (a, b) depends only on the generator parts; bilinearity gives the
    // mod-2 crossing count of pairs (u in a, v in b), u != v.
    GroupNF r;
    for (std::uint32_t u : a.gens)
        for (std::uint32_t v : b.gens)
            if (u != v) toggle_pair(r.comms, make_pair_sorted(u, v));
    return r;
}

GroupAlgebraElement GroupAlgebraElement::of(GroupNF nf) {
    GroupAlgebraElement e;
    e.terms_.insert(std::move(nf));
    return e;
}

void GroupAlgebraElement::toggle(GroupNF nf) {
    auto it = terms_.find(nf);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.insert(std::move(nf));
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r = *this;
    for (const GroupNF& t : o.terms_) r.toggle(t);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r;
    for (const GroupNF& a : terms_)
        for (const GroupNF& b : o.terms_) r.toggle(group_mul(a, b));
    return r;
}

std::uint32_t GroupAlgebraElement::max_index() const {
    std::uint32_t mx = 0;
    for (const GroupNF& t : terms_) mx = std::max(mx, t.max_index());
    return mx;
}

std::string GroupAlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const GroupNF& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.str();
    }
    return os.str();
}

}  // namespace nilcomm

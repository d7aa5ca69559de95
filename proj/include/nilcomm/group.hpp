#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilcomm/errors.hpp"

namespace nilcomm {

/// Unordered generator pair {i, j} stored as i < j.
using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

inline IndexPair make_pair_sorted(std::uint32_t a, std::uint32_t b) {
    return a < b ? IndexPair{a, b} : IndexPair{b, a};
}

/// Normal form of an element of the group
///   < y_1, y_2, ... | y_i^2 = 1, ((y_i,y_j),y_k) = 1 >:
/// a strictly increasing product of generators times a squarefree product of
/// central commutators (y_i, y_j), i < j, in lexicographic pair order. The
/// form is unique, so structural equality is group equality.
struct GroupNF {
    std::vector<std::uint32_t> gens;  // strictly increasing
    std::vector<IndexPair> comms;     // sorted, distinct, i < j in each pair

    auto operator<=>(const GroupNF&) const = default;

    bool is_identity() const { return gens.empty() && comms.empty(); }
    std::uint32_t max_index() const;
    std::string str() const;
};

GroupNF group_identity();
GroupNF group_generator(std::uint32_t i);

/// Collection product. Crossing a generator from b leftwards over a larger
/// generator from a deposits one central commutator; squares cancel.
GroupNF group_mul(const GroupNF& a, const GroupNF& b);

GroupNF group_inv(const GroupNF& a);

/// (a, b) = a^{-1} b^{-1} a b; lands in the derived subgroup.
GroupNF group_comm(const GroupNF& a, const GroupNF& b);

/// GF(2)-linear combination of group normal forms; coefficients are 0/1 so a
/// set with symmetric-difference addition is the canonical form.
class GroupAlgebraElement {
  public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(std::set<GroupNF> terms) : terms_(std::move(terms)) {}

    static GroupAlgebraElement zero() { return {}; }
    static GroupAlgebraElement unit() { return of(group_identity()); }
    static GroupAlgebraElement of(GroupNF nf);

    const std::set<GroupNF>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void toggle(GroupNF nf);  // add with GF(2) cancellation

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;

    bool operator==(const GroupAlgebraElement& o) const = default;

    std::uint32_t max_index() const;

    std::string str() const;

  private:
    std::set<GroupNF> terms_;
};

}  // namespace nilcomm

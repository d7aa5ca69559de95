#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilcomm/algebra.hpp"
#include "nilcomm/group.hpp"
#include "nilcomm/linear.hpp"

namespace nilcomm {

/// Squarefree monomial in the commuting elements d_{ij} = (y_i, y_j) + 1:
/// a sorted set of distinct index pairs (no diagonal pairs).
using DMonomial = std::vector<IndexPair>;

/// Sorted multiset of all indices occurring in a monomial (each pair
/// contributes both endpoints). The ideal generated by S is graded by this
/// multiset, which is what keeps exact membership small.
std::vector<std::uint32_t> dmonomial_index_multiset(const DMonomial& m);

/// GF(2) polynomial in the d_{ij}, subject to d_{ij}^2 = 0: set semantics.
class DPoly {
  public:
    DPoly() = default;
    static DPoly zero() { return {}; }
    static DPoly unit() { return of(DMonomial{}); }
    static DPoly of(DMonomial m);

    const std::set<DMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void toggle(DMonomial m);

    DPoly operator+(const DPoly& o) const;
    DPoly operator*(const DPoly& o) const;  // monomials with a repeated pair die

    bool operator==(const DPoly& o) const = default;

    std::string str() const;

  private:
    std::set<DMonomial> terms_;
};

/// Squarefree monomials in commuting t_i: sorted distinct index sets, GF(2).
class TPoly {
  public:
    TPoly() = default;

    const std::set<std::vector<std::uint32_t>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void toggle(std::vector<std::uint32_t> m);

    bool operator==(const TPoly& o) const = default;

    std::string str() const;

  private:
    std::set<std::vector<std::uint32_t>> terms_;
};

/// psi(d_{ij}) = t_i t_j extended multiplicatively, reduced mod all t^2 = 0.
/// psi kills every generator of S, so a nonzero image certifies that an
/// element of FG' is not in the ideal I.
TPoly psi(const DPoly& x);

/// Change of basis between the c-monomial basis of FG' and the d-monomial
/// basis: both directions expand products of (d+1) resp. (c+1), which over
/// GF(2) is the same subset-sum transform (an involution).
DPoly to_dbasis(const GroupAlgebraElement& x);  // NotInDerivedSubalgebra if gens nonempty
GroupAlgebraElement from_dbasis(const DPoly& x);

/// Generator of S on four indices: d_{i1 i2} d_{i3 i4} + d_{i1 i3} d_{i2 i4}
/// (possibly a single monomial, or zero, after the squarefree relations).
DPoly s_generator(std::uint32_t i1, std::uint32_t i2, std::uint32_t i3, std::uint32_t i4);

enum class Membership { InIdeal, NotInIdeal, Unknown };

const char* membership_name(Membership m);

/// Exact membership in I = FG.S and canonical reduction mod I, componentwise
/// over the grading (generator part, index multiset). Components whose
/// distinct-index support stays at or below `exact_limit` are decided by
/// elimination over the enumerated products; larger components fall back to
/// the one-sided psi certificate. Component spans are cached.
class IdealContext {
  public:
    explicit IdealContext(std::uint32_t exact_limit = kDefaultExactLimit);

    static constexpr std::uint32_t kDefaultExactLimit = 6;

    std::uint32_t exact_limit() const { return exact_limit_; }

    /// All generator indices of x must be <= support_bound (SupportExceeded
    /// otherwise). The verdict is exact whenever support_bound <= exact_limit;
    /// above that it is InIdeal/NotInIdeal only when every component could
    /// still be decided, Unknown otherwise.
    Membership member(const GroupAlgebraElement& x, std::uint32_t support_bound) const;

    /// Membership for an FG' component already in the d-basis.
    Membership member_dpoly(const DPoly& x) const;

    /// Canonical representative of x + I: every component reduced against the
    /// echelon span of its ideal component. Requires every component within
    /// the exact limit (SupportExceeded otherwise).
    GroupAlgebraElement reduce(const GroupAlgebraElement& x) const;

    /// psi applied to every (gens-part, FG'-part) component; nonzero for any
    /// component certifies x not in I.
    bool psi_nonzero(const GroupAlgebraElement& x) const;

  private:
    struct Component {
        std::vector<DMonomial> columns;
        std::map<DMonomial, std::size_t> column_index;
        EchelonBasis span;
        Component() : span(FieldTag::Gf2) {}
    };

    const Component& component(const std::vector<std::uint32_t>& multiset) const;
    SparseVector to_vector(const Component& c, const std::vector<DMonomial>& monos) const;

    std::uint32_t exact_limit_;
    mutable std::mutex mutex_;
    mutable std::map<std::vector<std::uint32_t>, std::unique_ptr<Component>> cache_;
};

/// All squarefree d-monomials whose index multiset is exactly `multiset`
/// (i.e. perfect matchings of the multiset into distinct non-diagonal pairs).
std::vector<DMonomial> dmonomials_of_multiset(const std::vector<std::uint32_t>& multiset);

/// The quotient F G / I restricted to generators y_1..y_support_bound
/// (support_bound = 0 gives the ground field). In exact mode (support within
/// the ideal context's limit) every element is kept canonically reduced and
/// zero tests are structural; otherwise elements are raw representatives and
/// zero tests degrade to psi certificates or Unknown.
class GroupQuotientAlgebra {
  public:
    using Element = GroupAlgebraElement;
    using Basis = GroupNF;

    GroupQuotientAlgebra(std::uint32_t support_bound,
                         std::shared_ptr<IdealContext> ideal = nullptr);

    FieldTag field() const { return FieldTag::Gf2; }
    std::uint32_t support_bound() const { return support_bound_; }
    bool exact() const { return exact_; }
    const IdealContext& ideal() const { return *ideal_; }

    Element zero() const { return GroupAlgebraElement::zero(); }
    Element unit() const { return GroupAlgebraElement::unit(); }
    Element generator(std::uint32_t i) const;
    Element coset(const GroupNF& nf) const;

    Element add(const Element& x, const Element& y) const { return reduce(x + y); }
    Element neg(const Element& x) const { return x; }  // char 2
    Element mul(const Element& x, const Element& y) const { return reduce(x * y); }
    Element scale(const Scalar& s, const Element& x) const;
    Ternary is_zero(const Element& x) const;

    std::vector<std::pair<Basis, Scalar>> terms(const Element& x) const;
    Element mul_basis(const Basis& a, const Basis& b) const;
    Element from_term(const Basis& nf, const Scalar& c) const;

    /// Reduced images of all normal forms on the support; spans the quotient
    /// (duplicates and zeros dropped), deterministic order.
    std::vector<Element> spanning_cosets() const;

    Element reduce(const Element& x) const;

  private:
    void check_support(const Element& x) const;

    std::uint32_t support_bound_;
    std::shared_ptr<IdealContext> ideal_;
    bool exact_;
};

}  // namespace nilcomm

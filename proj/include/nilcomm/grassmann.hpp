#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcomm/algebra.hpp"
#include "nilcomm/scalar.hpp"

namespace nilcomm {

/// Strictly increasing index sequence; {} is the unit monomial.
using GrassmannMonomial = std::vector<std::uint32_t>;

struct GrassmannMonomialOrder {
    bool operator()(const GrassmannMonomial& a, const GrassmannMonomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Product of basis monomials: zero when an index repeats, otherwise the
/// merged increasing sequence with the sign of the interleaving permutation.
/// The sign is (-1)^k where k counts pairs i in a, j in b with i > j; the
/// merge pass accumulates it directly.
std::optional<std::pair<int, GrassmannMonomial>> grassmann_monomial_mul(
    const GrassmannMonomial& a, const GrassmannMonomial& b);

/// Element of the Grassmann algebra over a field of characteristic != 2,
/// canonical: no zero coefficients, monomials ordered by (length, lex).
class GrassmannElement {
  public:
    using TermMap = std::map<GrassmannMonomial, Scalar, GrassmannMonomialOrder>;

    explicit GrassmannElement(FieldTag f);

    FieldTag field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(GrassmannMonomial m, const Scalar& c);

    GrassmannElement operator+(const GrassmannElement& o) const;
    GrassmannElement operator-() const;
    GrassmannElement operator-(const GrassmannElement& o) const { return *this + (-o); }
    GrassmannElement operator*(const GrassmannElement& o) const;
    GrassmannElement scaled(const Scalar& c) const;

    bool operator==(const GrassmannElement& o) const {
        return field_ == o.field_ && terms_ == o.terms_;
    }

    /// Largest generator index used (0 for scalars).
    std::uint32_t max_index() const;

    std::string str() const;

  private:
    FieldTag field_;
    TermMap terms_;
};

/// E (generator_bound absent) or the r-generated subalgebra E_r. E itself is
/// never materialized; the bound only constrains element construction and
/// basis enumeration, arithmetic is the same either way.
class GrassmannAlgebra {
  public:
    using Element = GrassmannElement;
    using Basis = GrassmannMonomial;

    explicit GrassmannAlgebra(FieldTag f,
                              std::optional<std::uint32_t> generator_bound = std::nullopt);

    FieldTag field() const { return field_; }
    std::optional<std::uint32_t> generator_bound() const { return bound_; }

    Element zero() const { return Element(field_); }
    Element unit() const;
    Element generator(std::uint32_t i) const;
    Element monomial(GrassmannMonomial m) const;

    Element add(const Element& x, const Element& y) const { return x + y; }
    Element neg(const Element& x) const { return -x; }
    Element mul(const Element& x, const Element& y) const { return x * y; }
    Element scale(const Scalar& s, const Element& x) const { return x.scaled(s); }
    Ternary is_zero(const Element& x) const { return ternary_of(x.is_zero()); }

    std::vector<std::pair<Basis, Scalar>> terms(const Element& x) const {
        return {x.terms().begin(), x.terms().end()};
    }
    Element mul_basis(const Basis& a, const Basis& b) const;
    Element from_term(const Basis& m, const Scalar& c) const;

    /// All 2^bound basis monomials in (length, lex) order; needs a bound.
    std::vector<GrassmannMonomial> basis_monomials() const;

  private:
    void check_index(std::uint32_t i) const;

    FieldTag field_;
    std::optional<std::uint32_t> bound_;
};

}  // namespace nilcomm

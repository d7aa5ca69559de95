#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilcomm/algebra.hpp"
#include "nilcomm/scalar.hpp"

namespace nilcomm {

using GenIndex = std::uint32_t;  // 1-based, matching x_1, x_2, ...

/// Monomial of the free algebra: a sequence of generator indices. The empty
/// word is the unit.
using Word = std::vector<GenIndex>;

/// Canonical term order: by length, then lexicographically.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

/// Sparse noncommutative polynomial over a fixed field; no zero coefficients
/// are stored, so equality is structural.
class NcPoly {
  public:
    using TermMap = std::map<Word, Scalar, WordOrder>;

    explicit NcPoly(FieldTag f) : field_(f) {}

    static NcPoly zero(FieldTag f) { return NcPoly(f); }
    static NcPoly unit(FieldTag f) { return from_word(f, {}); }
    static NcPoly generator(FieldTag f, GenIndex i) { return from_word(f, {i}); }
    static NcPoly from_word(FieldTag f, Word w);
    static NcPoly constant(const Scalar& c);

    FieldTag field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Word w, const Scalar& c);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly operator-(const NcPoly& o) const { return *this + (-o); }
    NcPoly operator*(const NcPoly& o) const;
    NcPoly scaled(const Scalar& c) const;

    bool operator==(const NcPoly& o) const {
        return field_ == o.field_ && terms_ == o.terms_;
    }

    /// Degree 1 in each of x_1..x_d and nothing else.
    bool is_multilinear_of_degree(std::uint32_t d) const;

    std::string str() const;

  private:
    FieldTag field_;
    TermMap terms_;
};

/// [p, q] = pq - qp.
NcPoly bracket(const NcPoly& p, const NcPoly& q);

/// Left-normed commutator [a_1, ..., a_n] = [[a_1, ..., a_{n-1}], a_n].
NcPoly left_normed(std::span<const NcPoly> args);
NcPoly left_normed(std::initializer_list<NcPoly> args);

/// The free algebra as an Algebra handle (mostly for homomorphism tests; the
/// constructed target algebras live in grassmann/group_quotient/tensor).
class FreeAlgebra {
  public:
    using Element = NcPoly;
    using Basis = Word;

    explicit FreeAlgebra(FieldTag f) : field_(f) {}

    FieldTag field() const { return field_; }
    Element zero() const { return NcPoly::zero(field_); }
    Element unit() const { return NcPoly::unit(field_); }
    Element add(const Element& x, const Element& y) const { return x + y; }
    Element neg(const Element& x) const { return -x; }
    Element mul(const Element& x, const Element& y) const { return x * y; }
    Element scale(const Scalar& s, const Element& x) const { return x.scaled(s); }
    Ternary is_zero(const Element& x) const { return ternary_of(x.is_zero()); }

    std::vector<std::pair<Basis, Scalar>> terms(const Element& x) const {
        return {x.terms().begin(), x.terms().end()};
    }
    Element mul_basis(const Basis& a, const Basis& b) const {
        return NcPoly::from_word(field_, concat(a, b));
    }
    Element from_term(const Basis& w, const Scalar& c) const {
        NcPoly p(field_);
        p.add_term(w, c);
        return p;
    }

  private:
    FieldTag field_;
};

/// The unique unital homomorphism determined by the assignment of generators;
/// unassigned generators go to zero.
template <Algebra A>
typename A::Element evaluate(const NcPoly& p,
                             const std::map<GenIndex, typename A::Element>& assignment,
                             const A& alg) {
    if (p.field() != alg.field())
        throw FieldMismatchError("polynomial and algebra have different coefficient fields");
    typename A::Element acc = alg.zero();
    for (const auto& [word, coeff] : p.terms()) {
        typename A::Element prod = alg.unit();
        bool dead = false;
        for (GenIndex g : word) {
            auto it = assignment.find(g);
            if (it == assignment.end()) {
                dead = true;
                break;
            }
            prod = alg.mul(prod, it->second);
        }
        if (dead) continue;
        acc = alg.add(acc, alg.scale(coeff, prod));
    }
    return acc;
}

}  // namespace nilcomm

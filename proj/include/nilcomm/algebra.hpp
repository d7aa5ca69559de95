#pragma once

#include <concepts>

#include "nilcomm/scalar.hpp"

namespace nilcomm {

/// Three-valued answer for zero tests. Quotient algebras whose exact ideal
/// membership is bounded degrade to Unknown instead of guessing.
enum class Ternary { False, True, Unknown };

inline Ternary ternary_of(bool b) { return b ? Ternary::True : Ternary::False; }

inline Ternary ternary_and(Ternary a, Ternary b) {
    if (a == Ternary::False || b == Ternary::False) return Ternary::False;
    if (a == Ternary::Unknown || b == Ternary::Unknown) return Ternary::Unknown;
    return Ternary::True;
}

/// The uniform carrier contract. An algebra object owns the context (field,
/// truncation, support bounds); its Element values are immutable data.
template <typename A>
concept Algebra = std::copyable<typename A::Element> &&
    requires(const A a, const typename A::Element x, const typename A::Element y,
             const Scalar s) {
        { a.field() } -> std::convertible_to<FieldTag>;
        { a.zero() } -> std::same_as<typename A::Element>;
        { a.unit() } -> std::same_as<typename A::Element>;
        { a.add(x, y) } -> std::same_as<typename A::Element>;
        { a.neg(x) } -> std::same_as<typename A::Element>;
        { a.mul(x, y) } -> std::same_as<typename A::Element>;
        { a.scale(s, x) } -> std::same_as<typename A::Element>;
        { a.is_zero(x) } -> std::same_as<Ternary>;
    };

template <Algebra A>
typename A::Element sub(const A& alg, const typename A::Element& x,
                        const typename A::Element& y) {
    return alg.add(x, alg.neg(y));
}

template <Algebra A>
Ternary equal(const A& alg, const typename A::Element& x, const typename A::Element& y) {
    return alg.is_zero(sub(alg, x, y));
}

/// Algebras that expose their canonical linear basis, as required by the
/// tensor product construction: elements decompose into (basis, coefficient)
/// terms and basis elements multiply back into elements.
template <typename A>
concept BasedAlgebra = Algebra<A> &&
    requires(const A a, const typename A::Element x, const typename A::Basis b,
             const Scalar s) {
        requires std::totally_ordered<typename A::Basis>;
        { a.terms(x) } -> std::convertible_to<
            std::vector<std::pair<typename A::Basis, Scalar>>>;
        { a.mul_basis(b, b) } -> std::same_as<typename A::Element>;
        { a.from_term(b, s) } -> std::same_as<typename A::Element>;
    };

}  // namespace nilcomm

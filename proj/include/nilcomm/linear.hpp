#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nilcomm/scalar.hpp"

namespace nilcomm {

/// Sparse coordinate vector over one field: a finite map from basis index to
/// nonzero Scalar, stored as an index-sorted array.
class SparseVector {
  public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseVector() : field_(FieldTag::Rational) {}
    explicit SparseVector(FieldTag f) : field_(f) {}

    /// Canonicalizes: sorts, merges repeated indices, drops zeros.
    static SparseVector from_entries(FieldTag f, std::vector<Entry> entries);

    FieldTag field() const { return field_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Smallest occupied index; vector must be nonempty.
    std::size_t leading_index() const { return entries_.front().first; }
    const Scalar& leading_coeff() const { return entries_.front().second; }

    Scalar coeff(std::size_t index) const;

    void add_term(std::size_t index, const Scalar& c);

    SparseVector operator+(const SparseVector& o) const;
    SparseVector operator*(const Scalar& c) const;

    /// this += c * o  (the elimination workhorse; linear-time merge).
    void axpy(const Scalar& c, const SparseVector& o);

    bool operator==(const SparseVector& o) const {
        return field_ == o.field_ && entries_ == o.entries_;
    }

  private:
    FieldTag field_;
    std::vector<Entry> entries_;
};

/// Row-echelon span under construction. Pivot is always the smallest occupied
/// index of a row (ascending basis-index column order, so results are
/// reproducible); stored rows are normalized to pivot coefficient 1.
///
/// With `track_history` each stored row also carries its expression as a
/// combination of the original inserted vectors, which is what
/// `solve_in_span` returns. Histories only ever reference vectors that
/// entered the basis, so they stay small.
class EchelonBasis {
  public:
    explicit EchelonBasis(FieldTag f, bool track_history = false)
        : field_(f), track_history_(track_history) {}

    /// Inserts v (tagged with the caller's identifier, typically its position
    /// in a generator list). Returns true if v enlarged the span.
    bool insert(SparseVector v, std::size_t tag);

    struct Reduction {
        SparseVector residual;
        std::map<std::size_t, Scalar> combination;  // tag -> coefficient
    };

    /// Reduces v against the basis. `residual` is empty iff v is in the span,
    /// in which case `combination` recombines the original tagged vectors to
    /// v exactly (only populated when history tracking is on).
    Reduction reduce(SparseVector v) const;

    bool contains(const SparseVector& v) const { return reduce(v).residual.empty(); }

    std::size_t rank() const { return rows_.size(); }
    FieldTag field() const { return field_; }

  private:
    struct Row {
        SparseVector vec;                          // pivot coefficient = 1
        std::map<std::size_t, Scalar> history;     // tag -> coefficient
    };

    FieldTag field_;
    bool track_history_;
    std::map<std::size_t, Row> rows_;  // keyed by pivot index
};

/// Expresses `target` in the span of `generators`, or nullopt if it is not in
/// the span. Exact; the returned (generator index, coefficient) pairs
/// recombine to `target`.
std::optional<std::vector<std::pair<std::size_t, Scalar>>> solve_in_span(
    const std::vector<SparseVector>& generators, const SparseVector& target);

}  // namespace nilcomm

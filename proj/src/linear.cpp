#include "nilcomm/linear.hpp"

#include <algorithm>

namespace nilcomm {

SparseVector SparseVector::from_entries(FieldTag f, std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v(f);
    for (auto& [idx, c] : entries) {
        if (c.tag() != f) throw MixedFieldsError();
        if (!v.entries_.empty() && v.entries_.back().first == idx) {
            v.entries_.back().second += c;
            if (v.entries_.back().second.is_zero()) v.entries_.pop_back();
        } else if (!c.is_zero()) {
            v.entries_.emplace_back(idx, std::move(c));
        }
    }
    return v;
}

Scalar SparseVector::coeff(std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return Scalar::zero(field_);
}

void SparseVector::add_term(std::size_t index, const Scalar& c) {
    if (c.tag() != field_) throw MixedFieldsError();
    if (c.is_zero()) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    } else {
        entries_.insert(it, {index, c});
    }
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
    SparseVector r = *this;
    r.axpy(Scalar::one(field_), o);
    return r;
}

SparseVector SparseVector::operator*(const Scalar& c) const {
    if (c.tag() != field_) throw MixedFieldsError();
    SparseVector r(field_);
    if (c.is_zero()) return r;
    r.entries_.reserve(entries_.size());
    for (const auto& [idx, v] : entries_) {
        Scalar p = v * c;
        if (!p.is_zero()) r.entries_.emplace_back(idx, std::move(p));
    }
    return r;
}

void SparseVector::axpy(const Scalar& c, const SparseVector& o) {
    if (field_ != o.field_ || c.tag() != field_) throw MixedFieldsError();
    if (c.is_zero() || o.entries_.empty()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin();
    auto b = o.entries_.begin();
    while (a != entries_.end() && b != o.entries_.end()) {
        if (a->first < b->first) {
            merged.push_back(std::move(*a++));
        } else if (b->first < a->first) {
            Scalar p = b->second * c;
            if (!p.is_zero()) merged.emplace_back(b->first, std::move(p));
            ++b;
        } else {
            Scalar s = a->second + b->second * c;
            if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    for (; a != entries_.end(); ++a) merged.push_back(std::move(*a));
    for (; b != o.entries_.end(); ++b) {
        Scalar p = b->second * c;
        if (!p.is_zero()) merged.emplace_back(b->first, std::move(p));
    }
    entries_ = std::move(merged);
}

bool EchelonBasis::insert(SparseVector v, std::size_t tag) {
    if (v.field() != field_) throw MixedFieldsError();
    Reduction red = reduce(std::move(v));
    if (red.residual.empty()) return false;
    // Normalize so the pivot coefficient is 1; fold the scaling into history.
    Scalar inv = red.residual.leading_coeff().inverse();
    Row row;
    row.vec = red.residual * inv;
    if (track_history_) {
        // residual = v - sum(combination), so row = inv*v - inv*sum(..).
        row.history[tag] = inv;
        for (const auto& [t, c] : red.combination) {
            Scalar h = -(c * inv);
            if (!h.is_zero()) row.history[t] = h;
        }
    }
    std::size_t pivot = row.vec.leading_index();
    rows_.emplace(pivot, std::move(row));
    return true;
}

EchelonBasis::Reduction EchelonBasis::reduce(SparseVector v) const {
    if (v.field() != field_) throw MixedFieldsError();
    Reduction red{SparseVector(field_), {}};
    // Work buffer; entries before `done` sit in non-pivot columns and are
    // final, since subtracting a row never disturbs indices below its pivot.
    std::vector<SparseVector::Entry> work(v.entries().begin(), v.entries().end());
    std::size_t done = 0;
    while (done < work.size()) {
        auto it = rows_.find(work[done].first);
        if (it == rows_.end()) {
            ++done;
            continue;
        }
        Scalar c = work[done].second;
        if (track_history_) {
            for (const auto& [t, h] : it->second.history) {
                auto [pos, fresh] = red.combination.try_emplace(t, Scalar::zero(field_));
                pos->second += c * h;
                if (pos->second.is_zero()) red.combination.erase(pos);
            }
        }
        // work[done..] -= c * row; the row's pivot entry cancels work[done].
        const auto& rowv = it->second.vec.entries();
        std::vector<SparseVector::Entry> tail;
        tail.reserve(work.size() - done + rowv.size());
        std::size_t a = done;
        std::size_t b = 0;
        while (a < work.size() && b < rowv.size()) {
            if (work[a].first < rowv[b].first) {
                tail.push_back(std::move(work[a++]));
            } else if (rowv[b].first < work[a].first) {
                Scalar p = -(rowv[b].second * c);
                if (!p.is_zero()) tail.emplace_back(rowv[b].first, std::move(p));
                ++b;
            } else {
                Scalar s = work[a].second - rowv[b].second * c;
                if (!s.is_zero()) tail.emplace_back(work[a].first, std::move(s));
                ++a;
                ++b;
            }
        }
        for (; a < work.size(); ++a) tail.push_back(std::move(work[a]));
        for (; b < rowv.size(); ++b) {
            Scalar p = -(rowv[b].second * c);
            if (!p.is_zero()) tail.emplace_back(rowv[b].first, std::move(p));
        }
        work.resize(done);
        work.insert(work.end(), std::make_move_iterator(tail.begin()),
                    std::make_move_iterator(tail.end()));
    }
    red.residual = SparseVector::from_entries(field_, std::move(work));
    return red;
}

std::optional<std::vector<std::pair<std::size_t, Scalar>>> solve_in_span(
    const std::vector<SparseVector>& generators, const SparseVector& target) {
    EchelonBasis basis(target.field(), true);
    for (std::size_t i = 0; i < generators.size(); ++i) basis.insert(generators[i], i);
    auto red = basis.reduce(target);
    if (!red.residual.empty()) return std::nullopt;
    std::vector<std::pair<std::size_t, Scalar>> combo(red.combination.begin(),
                                                      red.combination.end());
    return combo;
}

}  // namespace nilcomm

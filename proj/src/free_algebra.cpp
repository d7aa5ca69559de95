#include "nilcomm/free_algebra.hpp"

#include <sstream>

namespace nilcomm {

NcPoly NcPoly::from_word(FieldTag f, Word w) {
    NcPoly p(f);
    p.terms_.emplace(std::move(w), Scalar::one(f));
    return p;
}

NcPoly NcPoly::constant(const Scalar& c) {
    NcPoly p(c.tag());
    p.add_term({}, c);
    return p;
}

void NcPoly::add_term(Word w, const Scalar& c) {
    if (c.tag() != field_) throw MixedFieldsError();
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(w), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    if (field_ != o.field_) throw MixedFieldsError();
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NcPoly NcPoly::operator-() const {
    NcPoly r(field_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    if (field_ != o.field_) throw MixedFieldsError();
    NcPoly r(field_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) r.add_term(concat(wa, wb), ca * cb);
    return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    if (c.tag() != field_) throw MixedFieldsError();
    NcPoly r(field_);
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
    return r;
}

bool NcPoly::is_multilinear_of_degree(std::uint32_t d) const {
    for (const auto& [w, c] : terms_) {
        if (w.size() != d) return false;
        std::vector<bool> seen(d, false);
        for (GenIndex g : w) {
            if (g < 1 || g > d || seen[g - 1]) return false;
            seen[g - 1] = true;
        }
    }
    return true;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (GenIndex g : w) os << "*x" << g;
    }
    return os.str();
}

NcPoly bracket(const NcPoly& p, const NcPoly& q) { return p * q - q * p; }

NcPoly left_normed(std::span<const NcPoly> args) {
    if (args.size() < 2) throw TooFewArgumentsError();
    NcPoly acc = bracket(args[0], args[1]);
    for (std::size_t i = 2; i < args.size(); ++i) acc = bracket(acc, args[i]);
    return acc;
}

NcPoly left_normed(std::initializer_list<NcPoly> args) {
    std::vector<NcPoly> v(args);
    return left_normed(std::span<const NcPoly>(v));
}

}  // namespace nilcomm

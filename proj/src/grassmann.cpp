#include "nilcomm/grassmann.hpp"

#include <algorithm>
#include <sstream>

namespace nilcomm {

std::optional<std::pair<int, GrassmannMonomial>> grassmann_monomial_mul(
    const GrassmannMonomial& a, const GrassmannMonomial& b) {
    GrassmannMonomial merged;
    merged.reserve(a.size() + b.size());
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else if (b[j] < a[i]) {
            // b[j] jumps over the remaining a[i..]; each crossing flips the sign.
            if ((a.size() - i) % 2 != 0) sign = -sign;
            merged.push_back(b[j++]);
        } else {
            return std::nullopt;  // e_i^2 = 0
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return std::make_pair(sign, std::move(merged));
}

GrassmannElement::GrassmannElement(FieldTag f) : field_(f) {
    if (field_characteristic(f) == 2)
        throw FieldMismatchError("Grassmann arithmetic requires characteristic != 2");
}

void GrassmannElement::add_term(GrassmannMonomial m, const Scalar& c) {
    if (c.tag() != field_) throw MixedFieldsError();
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
    if (field_ != o.field_) throw MixedFieldsError();
    GrassmannElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement r(field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
    if (field_ != o.field_) throw MixedFieldsError();
    GrassmannElement r(field_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            auto prod = grassmann_monomial_mul(ma, mb);
            if (!prod) continue;
            Scalar c = ca * cb;
            if (prod->first < 0) c = -c;
            r.add_term(std::move(prod->second), c);
        }
    }
    return r;
}

GrassmannElement GrassmannElement::scaled(const Scalar& c) const {
    if (c.tag() != field_) throw MixedFieldsError();
    GrassmannElement r(field_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

std::uint32_t GrassmannElement::max_index() const {
    std::uint32_t mx = 0;
    for (const auto& [m, c] : terms_)
        if (!m.empty()) mx = std::max(mx, m.back());
    return mx;
}

std::string GrassmannElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (std::uint32_t i : m) os << "*e" << i;
    }
    return os.str();
}

GrassmannAlgebra::GrassmannAlgebra(FieldTag f, std::optional<std::uint32_t> generator_bound)
    : field_(f), bound_(generator_bound) {
    if (field_characteristic(f) == 2)
        throw FieldMismatchError("Grassmann arithmetic requires characteristic != 2");
}

GrassmannElement GrassmannAlgebra::unit() const {
    Element e(field_);
    e.add_term({}, Scalar::one(field_));
    return e;
}

void GrassmannAlgebra::check_index(std::uint32_t i) const {
    if (i == 0) throw Error("Grassmann generator indices are 1-based");
    if (bound_ && i > *bound_)
        throw GeneratorMismatchError("generator e" + std::to_string(i) +
                                     " outside E_" + std::to_string(*bound_));
}

GrassmannElement GrassmannAlgebra::generator(std::uint32_t i) const {
    check_index(i);
    Element e(field_);
    e.add_term({i}, Scalar::one(field_));
    return e;
}

GrassmannElement GrassmannAlgebra::monomial(GrassmannMonomial m) const {
    for (std::size_t i = 0; i < m.size(); ++i) {
        check_index(m[i]);
        if (i > 0 && m[i - 1] >= m[i]) throw Error("monomial indices must strictly increase");
    }
    Element e(field_);
    e.add_term(std::move(m), Scalar::one(field_));
    return e;
}

GrassmannElement GrassmannAlgebra::mul_basis(const Basis& a, const Basis& b) const {
    Element e(field_);
    auto prod = grassmann_monomial_mul(a, b);
    if (prod) e.add_term(std::move(prod->second), Scalar::of_int(field_, prod->first));
    return e;
}

GrassmannElement GrassmannAlgebra::from_term(const Basis& m, const Scalar& c) const {
    Element e(field_);
    e.add_term(m, c);
    return e;
}

std::vector<GrassmannMonomial> GrassmannAlgebra::basis_monomials() const {
    if (!bound_) throw Error("basis enumeration needs a generated subalgebra E_r");
    std::uint32_t r = *bound_;
    std::vector<GrassmannMonomial> out;
    out.reserve(std::size_t{1} << r);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        GrassmannMonomial m;
        for (std::uint32_t i = 0; i < r; ++i)
            if (mask & (std::uint64_t{1} << i)) m.push_back(i + 1);
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), GrassmannMonomialOrder{});
    return out;
}

}  // namespace nilcomm

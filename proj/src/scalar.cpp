#include "nilcomm/scalar.hpp"

namespace nilcomm {

const char* field_name(FieldTag t) {
    switch (t) {
        case FieldTag::Rational: return "Q";
        case FieldTag::Gf2: return "GF(2)";
        case FieldTag::Gf3: return "GF(3)";
    }
    return "?";
}

namespace {

std::uint8_t mod_p(long v, int p) {
    long r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint8_t>(r);
}

}  // namespace

Scalar Scalar::zero(FieldTag t) { return of_int(t, 0); }

Scalar Scalar::one(FieldTag t) { return of_int(t, 1); }

Scalar Scalar::of_int(FieldTag t, long v) {
    switch (t) {
        case FieldTag::Rational: return Scalar(t, mpq_class(v));
        case FieldTag::Gf2: return Scalar(t, mod_p(v, 2));
        case FieldTag::Gf3: return Scalar(t, mod_p(v, 3));
    }
    throw Error("bad field tag");
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(FieldTag::Rational, std::move(c));
}

bool Scalar::is_zero() const {
    if (tag_ == FieldTag::Rational) return sgn(std::get<mpq_class>(v_)) == 0;
    return std::get<std::uint8_t>(v_) == 0;
}

bool Scalar::is_one() const {
    if (tag_ == FieldTag::Rational) return std::get<mpq_class>(v_) == 1;
    return std::get<std::uint8_t>(v_) == 1;
}

bool Scalar::is_negative_half() const {
    switch (tag_) {
        case FieldTag::Rational: return sgn(std::get<mpq_class>(v_)) < 0;
        case FieldTag::Gf2: return false;
        case FieldTag::Gf3: return std::get<std::uint8_t>(v_) == 2;
    }
    return false;
}

Scalar Scalar::operator-() const {
    switch (tag_) {
        case FieldTag::Rational: return Scalar(tag_, mpq_class(-std::get<mpq_class>(v_)));
        case FieldTag::Gf2: return *this;
        case FieldTag::Gf3:
            return Scalar(tag_, static_cast<std::uint8_t>((3 - std::get<std::uint8_t>(v_)) % 3));
    }
    throw Error("bad field tag");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    switch (tag_) {
        case FieldTag::Rational:
            return Scalar(tag_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
        case FieldTag::Gf2:
            return Scalar(tag_, static_cast<std::uint8_t>(std::get<std::uint8_t>(v_) ^
                                                          std::get<std::uint8_t>(o.v_)));
        case FieldTag::Gf3:
            return Scalar(tag_, static_cast<std::uint8_t>(
                                    (std::get<std::uint8_t>(v_) + std::get<std::uint8_t>(o.v_)) % 3));
    }
    throw Error("bad field tag");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    switch (tag_) {
        case FieldTag::Rational:
            return Scalar(tag_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
        case FieldTag::Gf2:
            return Scalar(tag_, static_cast<std::uint8_t>(std::get<std::uint8_t>(v_) &
                                                          std::get<std::uint8_t>(o.v_)));
        case FieldTag::Gf3:
            return Scalar(tag_, static_cast<std::uint8_t>(
                                    (std::get<std::uint8_t>(v_) * std::get<std::uint8_t>(o.v_)) % 3));
    }
    throw Error("bad field tag");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    switch (tag_) {
        case FieldTag::Rational:
            return Scalar(tag_, mpq_class(1 / std::get<mpq_class>(v_)));
        case FieldTag::Gf2:
            return *this;
        case FieldTag::Gf3:
            // 1*1 = 1, 2*2 = 4 = 1: every nonzero element is its own inverse.
            return *this;
    }
    throw Error("bad field tag");
}

bool Scalar::operator==(const Scalar& o) const {
    if (tag_ != o.tag_) return false;
    if (tag_ == FieldTag::Rational)
        return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<std::uint8_t>(v_) == std::get<std::uint8_t>(o.v_);
}

std::string Scalar::str() const {
    if (tag_ == FieldTag::Rational) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::uint8_t>(v_));
}

const mpq_class& Scalar::rational_value() const {
    if (tag_ != FieldTag::Rational) throw Error("not a rational scalar");
    return std::get<mpq_class>(v_);
}

unsigned Scalar::residue() const {
    if (tag_ == FieldTag::Rational) throw Error("not a finite-field scalar");
    return std::get<std::uint8_t>(v_);
}

}  // namespace nilcomm

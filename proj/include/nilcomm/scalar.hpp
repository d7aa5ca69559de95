#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "nilcomm/errors.hpp"

namespace nilcomm {

enum class FieldTag : std::uint8_t { Rational, Gf2, Gf3 };

constexpr int field_characteristic(FieldTag t) {
    switch (t) {
        case FieldTag::Rational: return 0;
        case FieldTag::Gf2: return 2;
        case FieldTag::Gf3: return 3;
    }
    return 0;
}

const char* field_name(FieldTag t);

/// Element of one of the three supported coefficient fields, kept in canonical
/// form: rationals as reduced fractions with positive denominator, GF(p)
/// values as residues in {0,...,p-1}. Equality is representation equality.
class Scalar {
  public:
    Scalar() : tag_(FieldTag::Rational), v_(mpq_class(0)) {}

    static Scalar zero(FieldTag t);
    static Scalar one(FieldTag t);
    static Scalar of_int(FieldTag t, long v);
    static Scalar rational(const mpq_class& q);

    FieldTag tag() const { return tag_; }
    bool is_zero() const;
    bool is_one() const;

    /// True for the canonical "negative half" of the field: sgn < 0 over the
    /// rationals, residue > p/2 over GF(p). Used to normalize up-to-sign.
    bool is_negative_half() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "5/6", "-2", "1"; GF(p) residues print as plain integers.
    std::string str() const;

    const mpq_class& rational_value() const;
    unsigned residue() const;

  private:
    Scalar(FieldTag t, std::uint8_t r) : tag_(t), v_(r) {}
    Scalar(FieldTag t, mpq_class q) : tag_(t), v_(std::move(q)) {}
    void check_same_field(const Scalar& o) const {
        if (tag_ != o.tag_) throw MixedFieldsError();
    }

    FieldTag tag_;
    std::variant<std::uint8_t, mpq_class> v_;
};

}  // namespace nilcomm

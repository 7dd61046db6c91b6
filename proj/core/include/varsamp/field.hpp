#pragma once

#include <cstdint>

#include "varsamp/errors.hpp"

namespace varsamp {

class Field;

/// An element of a prime field F_p, stored as the canonical residue in [0, p).
/// Elements carry their modulus so that cross-field arithmetic is a hard error
/// rather than silent nonsense.
class FieldElement {
public:
    FieldElement() : value_(0), modulus_(0) {}

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        require_same(a, b);
        std::uint64_t s = a.value_ + b.value_; // p < 2^63, no overflow
        if (s >= a.modulus_) s -= a.modulus_;
        return FieldElement(s, a.modulus_);
    }

    friend FieldElement operator-(FieldElement a, FieldElement b) {
        require_same(a, b);
        std::uint64_t d = (a.value_ >= b.value_) ? a.value_ - b.value_
                                                 : a.value_ + a.modulus_ - b.value_;
        return FieldElement(d, a.modulus_);
    }

    friend FieldElement operator*(FieldElement a, FieldElement b) {
        require_same(a, b);
        unsigned __int128 prod = static_cast<unsigned __int128>(a.value_) * b.value_;
        return FieldElement(static_cast<std::uint64_t>(prod % a.modulus_), a.modulus_);
    }

    FieldElement operator-() const {
        check_bound();
        return FieldElement(value_ == 0 ? 0 : modulus_ - value_, modulus_);
    }

    FieldElement& operator+=(FieldElement b) { return *this = *this + b; }
    FieldElement& operator-=(FieldElement b) { return *this = *this - b; }
    FieldElement& operator*=(FieldElement b) { return *this = *this * b; }

    friend bool operator==(FieldElement a, FieldElement b) noexcept {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) noexcept { return !(a == b); }

private:
    friend class Field;
    friend FieldElement inv(FieldElement);
    friend FieldElement pow(FieldElement, std::uint64_t);

    FieldElement(std::uint64_t value, std::uint64_t modulus) : value_(value), modulus_(modulus) {}

    void check_bound() const {
        if (modulus_ == 0) throw MixedFields("element has no field attached");
    }

    static void require_same(FieldElement a, FieldElement b) {
        a.check_bound();
        if (a.modulus_ != b.modulus_) throw MixedFields("operands come from different fields");
    }

    std::uint64_t value_;
    std::uint64_t modulus_;
};

/// A prime field F_p for an odd prime p < 2^63. Primality is verified at
/// construction with a deterministic Miller-Rabin check valid for all 64-bit
/// inputs, so every later operation may assume the modulus is genuinely prime.
class Field {
public:
    explicit Field(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }

    FieldElement element(std::uint64_t v) const { return FieldElement(v % p_, p_); }
    FieldElement zero() const { return FieldElement(0, p_); }
    FieldElement one() const { return FieldElement(1, p_); }

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

    /// Deterministic primality check for 64-bit inputs (Miller-Rabin over a
    /// fixed base set known to cover the full range).
    static bool is_prime_u64(std::uint64_t n);

private:
    std::uint64_t p_;
};

inline Field mk_field(std::uint64_t p) { return Field(p); }

/// a^e with pow(a, 0) = 1 for every a, including a = 0.
FieldElement pow(FieldElement a, std::uint64_t e);

/// Multiplicative inverse; throws DivisionByZero on 0.
FieldElement inv(FieldElement a);

} // namespace varsamp

#pragma once

#include "qls/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace qls {

/// Element of the real field Q(sqrt(d1), sqrt(d2), ...): a finite sum
/// sum_d q_d * sqrt(d) with q_d rational and every radicand d squarefree.
/// Radicand 1 holds the rational part. Terms with zero coefficient are never
/// stored, so the zero element is the empty map and equality is structural.
///
/// Radicands are capped at 2^62 (products are checked in 128-bit); radicand
/// extraction factors through trial division up to 10^6, which certifies
/// squarefreeness for any leftover below 10^12 (it must be prime) and rejects
/// anything bigger.
class RadReal {
public:
    RadReal() = default;
    RadReal(long n) : RadReal(Rational(n)) {}
    explicit RadReal(const Rational& q);

    /// sqrt of a nonnegative rational, as (sqrt(p*q)/q) with the square part
    /// of p*q pulled out. Throws OutOfRange on negative input,
    /// RadicandTooLarge when the squarefree part cannot be certified.
    static RadReal sqrt_of(const Rational& q);

    /// Single term q * sqrt(d); d must be squarefree (not checked beyond the
    /// cap) -- internal helper for deserialization, which re-normalizes.
    static RadReal term(std::uint64_t radicand, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Rational part (coefficient of radicand 1).
    Rational rational_part() const;
    /// Whole value as a rational; throws OutOfRange when irrational terms remain.
    Rational as_rational() const;

    RadReal operator-() const;
    RadReal operator+(const RadReal& o) const;
    RadReal operator-(const RadReal& o) const;
    RadReal operator*(const RadReal& o) const;
    RadReal operator/(const RadReal& o) const; // throws DivisionByZero

    /// Field inverse via the product of Galois conjugates (sign flips on the
    /// primes appearing in the radicands). Throws DivisionByZero on zero,
    /// TooManyRadicals when more than 8 distinct primes are involved.
    RadReal inverse() const;

    RadReal& operator+=(const RadReal& o);
    RadReal& operator-=(const RadReal& o);
    RadReal& operator*=(const RadReal& o) { *this = *this * o; return *this; }

    bool operator==(const RadReal& o) const { return terms_ == o.terms_; }
    bool operator!=(const RadReal& o) const { return terms_ != o.terms_; }

    /// Exact numeric sign (-1, 0, +1). Zero is decided structurally; nonzero
    /// values are separated from 0 by interval refinement with exact rational
    /// bounds (sqrt(d) enclosed via integer square roots), which terminates
    /// because distinct square roots of squarefree integers are linearly
    /// independent over Q.
    int sign() const;

    std::string str() const;

    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

private:
    std::map<std::uint64_t, Rational> terms_;

    void add_term(std::uint64_t radicand, const Rational& coeff);
};

/// Deterministic structural order (radicands, then coefficients); NOT the
/// numeric order. Used to key canonical forms in maps.
int structural_compare(const RadReal& a, const RadReal& b);
int structural_compare(const Rational& a, const Rational& b);

} // namespace qls

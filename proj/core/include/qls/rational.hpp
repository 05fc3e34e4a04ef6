#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qls {

/// Arbitrary-precision rational, always stored canonicalized (gcd 1, positive
/// denominator). Thin wrapper over mpq_class so the rest of the library never
/// touches GMP types directly.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& v);

    /// Accepts "3", "-4/5", "0/7" (normalized to 0/1). Throws ParseError.
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws DivisionByZero
    Rational inverse() const;                    // throws DivisionByZero
    Rational abs() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }
    std::string str() const; // "p/q", or just "p" when q == 1

    /// Numerator/denominator as uint64 magnitudes; throws OutOfRange if they
    /// do not fit. Used by the radical layer for radicand manipulation.
    std::uint64_t num_abs_u64() const;
    std::uint64_t den_u64() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

} // namespace qls

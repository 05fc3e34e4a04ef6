#pragma once

#include "qls/rad_real.hpp"

#include <string>

namespace qls {

/// Complex number with RadReal real and imaginary parts; closed under the
/// field operations, so every computation in the library stays exact.
class Amplitude {
public:
    Amplitude() = default;
    Amplitude(long n) : re_(n) {}
    explicit Amplitude(Rational q) : re_(RadReal(q)) {}
    explicit Amplitude(RadReal re) : re_(std::move(re)) {}
    Amplitude(RadReal re, RadReal im) : re_(std::move(re)), im_(std::move(im)) {}

    /// Primitive cube root of unity, -1/2 + (sqrt(3)/2) i.
    static Amplitude omega();

    const RadReal& re() const { return re_; }
    const RadReal& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Amplitude conj() const { return Amplitude(re_, -im_); }
    /// |z|^2, a real value.
    RadReal mod_sq() const { return re_ * re_ + im_ * im_; }

    Amplitude operator-() const { return Amplitude(-re_, -im_); }
    Amplitude operator+(const Amplitude& o) const { return {re_ + o.re_, im_ + o.im_}; }
    Amplitude operator-(const Amplitude& o) const { return {re_ - o.re_, im_ - o.im_}; }
    Amplitude operator*(const Amplitude& o) const;
    Amplitude operator/(const Amplitude& o) const { return *this * o.inverse(); }
    Amplitude inverse() const; // throws DivisionByZero

    Amplitude& operator+=(const Amplitude& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Amplitude& operator*=(const Amplitude& o) { *this = *this * o; return *this; }

    bool operator==(const Amplitude& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Amplitude& o) const { return !(*this == o); }

    std::string str() const;

private:
    RadReal re_, im_;
};

int structural_compare(const Amplitude& a, const Amplitude& b);

} // namespace qls

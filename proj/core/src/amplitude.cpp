#include "qls/amplitude.hpp"

#include "qls/errors.hpp"

namespace qls {

Amplitude Amplitude::omega() {
    RadReal half_sqrt3 = RadReal::sqrt_of(Rational(3)) * RadReal(Rational(1, 2));
    return Amplitude(RadReal(Rational(-1, 2)), half_sqrt3);
}

Amplitude Amplitude::operator*(const Amplitude& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

Amplitude Amplitude::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero amplitude");
    RadReal inv_norm = mod_sq().inverse();
    return {re_ * inv_norm, -im_ * inv_norm};
}

std::string Amplitude::str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return "(" + im_.str() + ")*i";
    return re_.str() + " + (" + im_.str() + ")*i";
}

int structural_compare(const Amplitude& a, const Amplitude& b) {
    int c = structural_compare(a.re(), b.re());
    if (c != 0) return c;
    return structural_compare(a.im(), b.im());
}

} // namespace qls

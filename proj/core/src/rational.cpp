#include "qls/rational.hpp"

#include "qls/errors.hpp"

namespace qls {

Rational::Rational(long n, long d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw ParseError("bad rational literal: " + text);
    if (sgn(v.get_den()) == 0)
        throw DivisionByZero("rational literal with zero denominator: " + text);
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    r.v_ = v_ + o.v_;
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    r.v_ = v_ - o.v_;
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    r.v_ = v_ * o.v_;
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    Rational r;
    r.v_ = v_ / o.v_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

std::uint64_t Rational::num_abs_u64() const {
    mpz_class n = ::abs(v_.get_num());
    if (!n.fits_ulong_p())
        throw OutOfRange("rational numerator exceeds 64 bits: " + n.get_str());
    return n.get_ui();
}

std::uint64_t Rational::den_u64() const {
    const mpz_class& d = v_.get_den();
    if (!d.fits_ulong_p())
        throw OutOfRange("rational denominator exceeds 64 bits: " + d.get_str());
    return d.get_ui();
}

} // namespace qls

#include "qls/rad_real.hpp"

#include "qls/errors.hpp"

#include <gmpxx.h>

#include <bit>
#include <numeric>
#include <set>
#include <vector>

namespace qls {

namespace {

constexpr std::uint64_t kRadicandCap = std::uint64_t(1) << 62;
constexpr std::uint64_t kTrialLimit = 1'000'000;
constexpr std::uint64_t kPrimeCertLimit = 1'000'000'000'000ULL; // 10^12

// Factor a squarefree radicand into primes. Trial division up to 10^6; a
// leftover below 10^12 has no small factors so it is prime, anything larger
// cannot be certified.
std::vector<std::uint64_t> factor_radicand(std::uint64_t d) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= kTrialLimit && p * p <= d; ++p) {
        if (d % p == 0) {
            primes.push_back(p);
            d /= p; // squarefree: each prime appears once
        }
    }
    if (d > 1) {
        if (d >= kPrimeCertLimit)
            throw RadicandTooLarge("cannot factor radicand remainder " + std::to_string(d));
        primes.push_back(d);
    }
    return primes;
}

} // namespace

RadReal::RadReal(const Rational& q) {
    add_term(1, q);
}

RadReal RadReal::term(std::uint64_t radicand, const Rational& coeff) {
    if (radicand == 0 || radicand > kRadicandCap)
        throw RadicandTooLarge("radicand out of range: " + std::to_string(radicand));
    RadReal r;
    r.add_term(radicand, coeff);
    return r;
}

RadReal RadReal::sqrt_of(const Rational& q) {
    if (q.sign() < 0) throw OutOfRange("sqrt of negative rational " + q.str());
    if (q.is_zero()) return RadReal();

    // sqrt(p/q) = sqrt(p*q) / q; pull the square part out of p*q.
    mpz_class p(q.raw().get_num());
    mpz_class den(q.raw().get_den());
    mpz_class n = p * den;
    mpz_class outside = 1;
    std::uint64_t rad = 1;

    for (std::uint64_t d = 2; d <= kTrialLimit; ++d) {
        mpz_class dd(static_cast<unsigned long>(d));
        if (dd * dd > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            unsigned exp = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
                ++exp;
            }
            for (unsigned i = 0; i < exp / 2; ++i) outside *= static_cast<unsigned long>(d);
            if (exp % 2) {
                if (rad > kRadicandCap / d)
                    throw RadicandTooLarge("radicand exceeds cap in sqrt");
                rad *= d;
            }
        }
    }
    if (n > 1) {
        mpz_class root, rem;
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
        if (rem == 0) {
            outside *= root;
        } else {
            if (!n.fits_ulong_p() || n.get_ui() >= kPrimeCertLimit)
                throw RadicandTooLarge("cannot certify squarefree part of " + n.get_str());
            std::uint64_t r = n.get_ui();
            if (rad > kRadicandCap / r)
                throw RadicandTooLarge("radicand exceeds cap in sqrt");
            rad *= r;
        }
    }

    return term(rad, Rational(mpq_class(outside, den)));
}

bool RadReal::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 1;
}

Rational RadReal::rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational() : it->second;
}

Rational RadReal::as_rational() const {
    if (!is_rational())
        throw OutOfRange("value is irrational: " + str());
    return rational_part();
}

void RadReal::add_term(std::uint64_t radicand, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RadReal RadReal::operator-() const {
    RadReal r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

RadReal RadReal::operator+(const RadReal& o) const {
    RadReal r = *this;
    r += o;
    return r;
}

RadReal RadReal::operator-(const RadReal& o) const {
    RadReal r = *this;
    r -= o;
    return r;
}

RadReal& RadReal::operator+=(const RadReal& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

RadReal& RadReal::operator-=(const RadReal& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

RadReal RadReal::operator*(const RadReal& o) const {
    RadReal r;
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : o.terms_) {
            // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)(d2/g)) with g = gcd: the two
            // cofactors are coprime and squarefree, so the product is too.
            std::uint64_t g = std::gcd(d1, d2);
            std::uint64_t r1 = d1 / g, r2 = d2 / g;
            unsigned __int128 prod = static_cast<unsigned __int128>(r1) * r2;
            if (prod > kRadicandCap)
                throw RadicandTooLarge("radicand product exceeds cap");
            Rational coeff = c1 * c2 * Rational(mpq_class(static_cast<unsigned long>(g)));
            r.add_term(static_cast<std::uint64_t>(prod), coeff);
        }
    }
    return r;
}

RadReal RadReal::operator/(const RadReal& o) const {
    return *this * o.inverse();
}

RadReal RadReal::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) return RadReal(rational_part().inverse());

    std::set<std::uint64_t> prime_set;
    for (const auto& [d, c] : terms_) {
        if (d == 1) continue;
        for (std::uint64_t p : factor_radicand(d)) prime_set.insert(p);
    }
    std::vector<std::uint64_t> primes(prime_set.begin(), prime_set.end());
    if (primes.size() > 8)
        throw TooManyRadicals("inverse over " + std::to_string(primes.size()) + " radical primes");

    // Multiply all nontrivial sign-flip conjugates; the full product with the
    // original value is fixed by every flip, hence rational (the field norm).
    RadReal y(Rational(1));
    std::uint32_t n_masks = (std::uint32_t(1) << primes.size());
    for (std::uint32_t mask = 1; mask < n_masks; ++mask) {
        RadReal conj;
        for (const auto& [d, c] : terms_) {
            unsigned flips = 0;
            for (std::size_t i = 0; i < primes.size(); ++i)
                if ((mask >> i & 1) && d % primes[i] == 0) ++flips;
            conj.add_term(d, (flips % 2) ? -c : c);
        }
        y *= conj;
    }

    RadReal norm = *this * y;
    if (!norm.is_rational())
        throw Error("internal_error", "conjugate product is not rational: " + norm.str());
    Rational nr = norm.as_rational();
    if (nr.is_zero())
        throw Error("internal_error", "vanishing norm for nonzero value: " + str());
    return y * RadReal(nr.inverse());
}

int RadReal::sign() const {
    if (terms_.empty()) return 0;

    bool all_pos = true, all_neg = true;
    for (const auto& [d, c] : terms_) {
        if (c.sign() > 0) all_neg = false;
        else all_pos = false;
    }
    if (all_pos) return 1;
    if (all_neg) return -1;

    // Mixed signs: shrink an exact rational enclosure until 0 is excluded.
    // Nonzero is guaranteed: sqrt's of distinct squarefree integers are
    // linearly independent over Q, and the term map is nonempty.
    for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
        Rational lower, upper;
        mpz_class scale = mpz_class(1) << bits;
        for (const auto& [d, c] : terms_) {
            mpz_class m = mpz_class(static_cast<unsigned long>(d)) << (2 * bits);
            mpz_class root = sqrt(m); // floor
            Rational lo(mpq_class(root, scale));
            Rational hi(mpq_class(root + 1, scale));
            if (c.sign() >= 0) {
                lower += c * lo;
                upper += c * hi;
            } else {
                lower += c * hi;
                upper += c * lo;
            }
        }
        if (lower.sign() > 0) return 1;
        if (upper.sign() < 0) return -1;
    }
    throw OutOfRange("sign refinement exceeded precision cap for " + str());
}

std::string RadReal::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (d == 1) {
            out += c.str();
        } else {
            out += "(" + c.str() + ")*sqrt(" + std::to_string(d) + ")";
        }
    }
    return out;
}

int structural_compare(const Rational& a, const Rational& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

int structural_compare(const RadReal& a, const RadReal& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = structural_compare(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

} // namespace qls

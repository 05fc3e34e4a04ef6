#include "qls/state_vector.hpp"

#include "qls/errors.hpp"

namespace qls {

StateVector StateVector::basis(std::size_t i, std::size_t n) {
    if (i >= n) throw IndexOutOfRange("basis index " + std::to_string(i) + " in dimension " + std::to_string(n));
    StateVector v(n);
    v.amps_[i] = Amplitude(1);
    return v;
}

bool StateVector::is_zero_vector() const {
    for (const auto& a : amps_)
        if (!a.is_zero()) return false;
    return true;
}

StateVector StateVector::operator+(const StateVector& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("vector addition across dimensions");
    StateVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.amps_[i] = amps_[i] + o.amps_[i];
    return r;
}

StateVector StateVector::operator-(const StateVector& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("vector subtraction across dimensions");
    StateVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.amps_[i] = amps_[i] - o.amps_[i];
    return r;
}

StateVector StateVector::scaled(const Amplitude& s) const {
    StateVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.amps_[i] = amps_[i] * s;
    return r;
}

StateVector StateVector::tensor(const StateVector& o) const {
    StateVector r(dim() * o.dim());
    for (std::size_t a = 0; a < dim(); ++a) {
        if (amps_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.dim(); ++b) {
            if (o.amps_[b].is_zero()) continue;
            r.amps_[a * o.dim() + b] = amps_[a] * o.amps_[b];
        }
    }
    return r;
}

Amplitude StateVector::inner(const StateVector& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("inner product across dimensions");
    Amplitude acc;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (amps_[i].is_zero() || o.amps_[i].is_zero()) continue;
        acc += amps_[i].conj() * o.amps_[i];
    }
    return acc;
}

RadReal StateVector::norm_sq() const {
    RadReal acc;
    for (const auto& a : amps_)
        if (!a.is_zero()) acc += a.mod_sq();
    return acc;
}

std::string StateVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) out += ", ";
        out += amps_[i].str();
    }
    return out + ")";
}

int structural_compare(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        int c = structural_compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace qls

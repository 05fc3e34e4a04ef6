#pragma once

#include "qls/amplitude.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qls {

/// Dense vector of exact amplitudes. Dimension is just the component count;
/// tensor products concatenate index spaces in row-major order, i.e. the
/// (a*m + b) component of u (x) v is u_a * v_b for v of dimension m.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim) : amps_(dim) {}
    explicit StateVector(std::vector<Amplitude> amps) : amps_(std::move(amps)) {}

    /// Computational basis vector |i> in dimension n.
    static StateVector basis(std::size_t i, std::size_t n);

    std::size_t dim() const { return amps_.size(); }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
    Amplitude& operator[](std::size_t i) { return amps_[i]; }
    const std::vector<Amplitude>& amps() const { return amps_; }

    bool is_zero_vector() const;

    StateVector operator+(const StateVector& o) const; // throws DimensionMismatch
    StateVector operator-(const StateVector& o) const;
    StateVector scaled(const Amplitude& s) const;

    /// Kronecker product; this (x) o.
    StateVector tensor(const StateVector& o) const;

    /// <this|o>, conjugate-linear in this. Throws DimensionMismatch.
    Amplitude inner(const StateVector& o) const;

    RadReal norm_sq() const;
    bool is_unit() const { return norm_sq() == RadReal(1); }

    bool operator==(const StateVector& o) const { return amps_ == o.amps_; }
    bool operator!=(const StateVector& o) const { return amps_ != o.amps_; }

    std::string str() const;

private:
    std::vector<Amplitude> amps_;
};

int structural_compare(const StateVector& a, const StateVector& b);

} // namespace qls

#pragma once

#include "qls/state_vector.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qls {

/// Phase-class representative: the vector divided by its first nonzero
/// amplitude, so the first nonzero entry is exactly 1. Two unit vectors get
/// equal keys iff they differ by a unit-modulus scalar.
/// Throws DivisionByZero on the zero vector; TooManyRadicals can propagate
/// from the amplitude inversion.
StateVector canonicalize(const StateVector& v);

/// Division-free ground-truth test: u ~ v iff u_j*v_k == u_k*v_j for all
/// j < k (cross-product proportionality; exact for nonzero vectors).
bool same_up_to_phase(const StateVector& u, const StateVector& v);

struct PhaseClass {
    StateVector representative;           // first occurrence, as given
    std::optional<StateVector> canonical; // absent if canonicalization failed
    std::size_t multiplicity = 0;
};

/// Exact partition of a cell multiset into phase classes. Classes are listed
/// in first-occurrence order; the result is independent of thread count
/// (keys are computed in parallel, merged sequentially in input order).
/// Vectors whose canonicalization hits TooManyRadicals are grouped by the
/// pairwise cross-product test instead.
class Census {
public:
    static Census of(const std::vector<StateVector>& cells, int threads = 1);

    std::size_t cardinality() const { return classes_.size(); }
    const std::vector<PhaseClass>& classes() const { return classes_; }

private:
    std::vector<PhaseClass> classes_;
};

struct SetRelations {
    std::size_t common = 0;
    std::size_t a_only = 0;
    std::size_t b_only = 0;
};

/// Class-set intersection counts between two cell collections.
SetRelations set_relations(const Census& a, const Census& b);

} // namespace qls

#pragma once

#include "qls/phase_class.hpp"
#include "qls/state_vector.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qls {

/// Optional provenance carried by generated objects. Objects whose defining
/// data needed fixing to satisfy their own invariants are marked repaired,
/// with the touched cell coordinates and/or the names of repaired parts.
struct ObjectMeta {
    std::string name;
    bool repaired = false;
    std::vector<std::pair<std::size_t, std::size_t>> repaired_entries;
    std::vector<std::string> repaired_components;
};

/// n x n grid of unit vectors where every row and every column must form an
/// orthonormal basis. space lists the tensor-factor dimensions of the cell
/// space (informational; product need not equal order, e.g. order-4 grids
/// embedded in a 6-dimensional space).
struct QuantumLatinSquare {
    std::size_t order = 0;
    std::vector<std::size_t> space;
    std::vector<std::vector<StateVector>> cells; // row-major [row][col]
    ObjectMeta meta;

    std::vector<StateVector> flat_cells() const;
};

/// Rectangular grid whose rows (only) are orthonormal sets.
struct RowQLR {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> space;
    std::vector<std::vector<StateVector>> cells;
    ObjectMeta meta;

    std::vector<StateVector> flat_cells() const;
};

struct NormFailure {
    std::size_t row, col;
    RadReal norm_sq;
};

struct OrthFailure {
    bool in_row;        // false: column
    std::size_t index;  // which row/column
    std::size_t a, b;   // offending positions within it
    Amplitude inner;
};

struct VerifyReport {
    std::vector<NormFailure> norm_failures;
    std::vector<OrthFailure> orth_failures;
    std::vector<std::string> shape_failures;
    std::size_t cardinality = 0;

    bool ok() const {
        return norm_failures.empty() && orth_failures.empty() && shape_failures.empty();
    }
};

/// Exact orthonormality verification of every row and column plus the
/// cardinality census. Never throws on invariant violations; they are
/// reported. threads bounds data parallelism; results are thread-count
/// independent.
VerifyReport verify(const QuantumLatinSquare& q, int threads = 1);

/// Row-orthonormality check for rectangles (the product construction's
/// precondition).
VerifyReport verify_rows(const RowQLR& r);

/// Census over all cells of a square.
Census census_of(const QuantumLatinSquare& q, int threads = 1);

} // namespace qls

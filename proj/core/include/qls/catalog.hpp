#pragma once

#include "qls/square.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qls::catalog {

/// A rectangular fragment of a square: cells need not span their ambient
/// space, so no orthonormal-basis invariant is implied (rows and columns are
/// orthonormal sets within their span).
struct Grid {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> space;
    std::vector<std::vector<StateVector>> cells;
    ObjectMeta meta;

    std::vector<StateVector> flat_cells() const;
};

/// Dense exact matrix (used for the orthonormal 6x6 and 4x4 generators).
struct NamedMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<Amplitude>> entries;
    ObjectMeta meta;
};

NamedMatrix matrix_multiply(const NamedMatrix& a, const NamedMatrix& b);
NamedMatrix matrix_transpose(const NamedMatrix& a);
StateVector matrix_column(const NamedMatrix& a, std::size_t j);
/// True iff rows and columns are orthonormal under the sesquilinear inner
/// product (conjugate in the first slot).
bool is_orthonormal(const NamedMatrix& a);

// ---- 2x2 and 3x3 cell families over coordinate subspaces of H_2 (x) H_3 ----

enum class BlockName { A, B, C, D, E };

/// The rotation-style family with rational parameter a: 2x2 over a coordinate
/// plane (A, B, C) or 3x3 over a coordinate 3-space (D, E).
Grid block_family(BlockName which, const Rational& a);

Grid f1();
Grid f2();            // repaired to be exactly orthonormal
Grid f2_unrepaired(); // defective source form, kept for regression pinning
Grid g1();            // repaired (one cell)
Grid g1_unrepaired();

// ---- row-orthonormal rectangles and the product construction ----

RowQLR u_rect();       // 2x2 over H_2, cardinality 4
RowQLR v1_rect();      // 2x2 over H_2, cardinality 4
RowQLR v2_rect();      // 2x2 over H_2, cardinality 4
RowQLR u0_rect();      // 3x2 over H_2, cardinality 6
RowQLR v0_rect();      // 2x3 over H_3, cardinality 6
RowQLR ui_rect(std::size_t i); // 3x2 over H_2, the slope-(3i+2..3i+4) family
RowQLR menu24_rect();  // 3x2 over H_2, cardinality 4 (pads the order-6 menu)

/// Block-tensor product: U is m x n with dim-n cells, V is n x m with dim-m
/// cells, both row-orthonormal; the result is an order-mn square whose
/// block (i,j) holds u_{i,(j+k) mod n} (x) v_{j,(i+l) mod m} at (k,l).
QuantumLatinSquare product_construct(const RowQLR& u, const RowQLR& v);

// ---- order-4 squares in H_2 (x) H_2 ----

enum class Qls4Variant { Xp, Xpp };

/// Assembled 4x4 square of dim-4 cells with cardinality 16 (variant selects
/// which of the two published block mixtures).
QuantumLatinSquare xp_square();
QuantumLatinSquare xpp_square();

/// Column basis from the 4x4 unitary smat(): alpha[0] = |00>.
std::array<StateVector, 4> alpha_basis();

/// Order-4 squares over the alpha basis: cyclic (cardinality 4) or the
/// sqrt-2-mixed variant (cardinality 8; last row repaired).
QuantumLatinSquare alpha_qls4(bool mixed);

/// 4x4 grid of dim-6 cells spanning the (|00>,|01>,|10>,|11>) subspace with
/// cardinality c in {4,6,8,16}; variant applies to c = 16 only.
Grid qls4(int c, Qls4Variant variant = Qls4Variant::Xp);

/// Embedded alpha squares as 4x4 grids of dim-6 cells.
Grid qls4_alpha(bool mixed);

// ---- order-6 layouts ----

/// [[C_a, X00, X01], [X10, C_b, X11], [X00, X10, C_d]] for a 4x4 grid X of
/// dim-6 cells partitioned into 2x2 blocks.
QuantumLatinSquare gen_l(const Rational& a, const Rational& b, const Rational& d,
                         const Grid& x);

/// The mixed-block layout giving cardinality 24 + 2|{a,b,d}|.
QuantumLatinSquare gen_w_abd(const Rational& a, const Rational& b, const Rational& d);

QuantumLatinSquare w3();
QuantumLatinSquare w4();
QuantumLatinSquare w5();
QuantumLatinSquare h0();
QuantumLatinSquare h1();

/// Order-6 square with cardinality 36 whose rows are the columns of the six
/// stacked orthonormal matrices xmat(1..6).
QuantumLatinSquare w0();

/// Conjugated variants of w0 via jmat(k): cardinality 36 each.
QuantumLatinSquare mk(int k);

/// Order-6 squares of cardinality 36 with pairwise disjoint class sets.
QuantumLatinSquare wtilde(std::size_t i);

// ---- fixed matrices ----

NamedMatrix xmat(int k); // k in 1..6, real orthonormal
NamedMatrix jmat(int k); // k in 1..4, real orthonormal (k = 3 repaired)
NamedMatrix jmat3_unrepaired();
NamedMatrix smat(); // 4x4 unitary over the omega field (repaired)
NamedMatrix smat_unrepaired();

// ---- ledger squares ----

/// Square whose class set adds exactly ell new classes relative to
/// classes(h0) U classes(h1); ell in {2..14, 16, 18, 20, 22, 24, 26, 36}.
QuantumLatinSquare hell(int ell);

/// Same, relative to classes(w0); ell in {2..14, 16, 18, 20, 22, 36}.
QuantumLatinSquare hell_prime(int ell);

const std::vector<int>& hell_values();
const std::vector<int>& hell_prime_values();

// ---- menus and the explicit order-18 square ----

/// Order-6 square with the requested cardinality, for
/// c in {6,8,9,10,11,12,14,16,18,20,22,24,26,28,30,36}.
QuantumLatinSquare qls6_with_cardinality(int c);

const std::vector<int>& qls6_menu();

/// Order-18 square of cardinality 313 (the value unreachable by the generic
/// planner at m = 3).
QuantumLatinSquare qls18_313();

/// "Replace symbol a_{i,j} = (j - i) mod m with |a_{i,j}> (x) (block cell)":
/// assembles an order-6m square from an m x m grid of order-6 squares.
QuantumLatinSquare assemble_blocks(std::size_t m,
                                   const std::vector<std::vector<QuantumLatinSquare>>& blocks);

/// Dim-4 to dim-6 embedding onto the (|00>,|01>,|10>,|11>) coordinates.
StateVector embed_4_to_6(const StateVector& v);

} // namespace qls::catalog
